#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(LATTICECOUNT_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "/tmp/latticecount_test_" + name;
    std::ofstream f(path);
    f << content;
    return path;
}

const std::string kSquare = "0 0\n1 0\n1 1\n0 1\n";
const std::string kSimplex = "0 0\n1 0\n0 1\n";
const std::string kHalfSquare = "0 0\n1/2 0\n1/2 1/2\n0 1/2\n";

} // namespace

TEST_CASE("count command") {
    auto square = write_temp("square.txt", kSquare);
    auto simplex = write_temp("simplex.txt", kSimplex);
    auto half = write_temp("half.txt", kHalfSquare);

    auto r = run("count " + square + " -t 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "16\n");

    r = run("count " + simplex + " -t 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "6\n");

    // the origin lies on the boundary of [0,1/2]^2
    r = run("count " + half + " -t 1 --boundary");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1\n");

    r = run("count " + square + " -t 2 --interior");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1\n");

    r = run("count " + square + " -t 3 --json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["count"] == "16");
    CHECK(j["t"] == "3");
    CHECK(j["mode"] == "closure");
}

TEST_CASE("count error exit codes") {
    auto square = write_temp("square.txt", kSquare);
    auto bad = write_temp("bad.txt", "1 2 3\n");
    auto degen = write_temp("degen.txt", "0 0\n1 0\n2 0\n");
    auto bowtie = write_temp("bowtie.txt", "0 0\n2 2\n2 0\n0 2\n");

    CHECK(run("count " + bad + " -t 1").exit_code == 2);
    CHECK(run("count /nonexistent/file.txt -t 1").exit_code == 2);
    CHECK(run("count " + degen + " -t 1").exit_code == 3);
    CHECK(run("count " + bowtie + " -t 1").exit_code == 3);
    CHECK(run("count " + square + " -t 0").exit_code == 4);
    CHECK(run("count " + square + " -t -2").exit_code == 4);
}

TEST_CASE("ehrhart command") {
    auto square = write_temp("square.txt", kSquare);
    auto simplex = write_temp("simplex.txt", kSimplex);
    auto half = write_temp("half.txt", kHalfSquare);

    auto r = run("ehrhart " + square);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "period: 1\nc2: 1\nr=0: c1=2 c0=1\n");

    r = run("ehrhart " + simplex + " --json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["period"] == "1");
    CHECK(j["c2"] == "1/2");
    CHECK(j["c1"] == nlohmann::json::array({"3/2"}));
    CHECK(j["c0"] == nlohmann::json::array({"1"}));

    r = run("ehrhart " + half + " --json");
    CHECK(r.exit_code == 0);
    j = nlohmann::json::parse(r.output);
    CHECK(j["period"] == "2");
    CHECK(j["c2"] == "1/4");
}

TEST_CASE("sigma command") {
    auto r = run("sigma 3 5 0");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1/4\n");

    r = run("sigma 1 1 0");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1/4\n");

    r = run("sigma 0 7 2 --naive");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "3/28\n");

    r = run("sigma 2 3 1/2");
    CHECK(r.exit_code == 0);
    CHECK(!r.output.empty());

    CHECK(run("sigma 1 0 0").exit_code == 4);
    r = run("sigma 4 6 0");
    CHECK(r.exit_code == 5);
    CHECK(r.output.find("--naive") != std::string::npos);
    CHECK(run("sigma 4 6 0 --naive").exit_code == 0);
}

TEST_CASE("verify command") {
    auto r = run("verify --suite dedekind --trials 50 --seed 7 --max-size 100000");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("50/50 pass") != std::string::npos);

    r = run("verify --suite oracle-triangle --trials 25 --seed 1 --max-size 6");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("25/25 pass") != std::string::npos);

    r = run("verify --suite fourier --trials 20 --seed 3 --max-size 12");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("max deviation") != std::string::npos);

    CHECK(run("verify --suite nosuch --trials 1 --seed 0 --max-size 1").exit_code != 0);
}

TEST_CASE("determinism: identical command lines give identical output") {
    auto half = write_temp("half.txt", kHalfSquare);
    auto a = run("verify --suite rademacher --trials 30 --seed 42 --max-size 50");
    auto b = run("verify --suite rademacher --trials 30 --seed 42 --max-size 50");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    auto c = run("ehrhart " + half + " --json");
    auto d = run("ehrhart " + half + " --json");
    CHECK(c.output == d.output);
}

TEST_CASE("version and help") {
    CHECK(run("--version").exit_code == 0);
    auto r = run("--help");
    CHECK(r.exit_code == 0);
    for (const char* cmd : {"count", "ehrhart", "sigma", "verify"})
        CHECK(r.output.find(cmd) != std::string::npos);
}
