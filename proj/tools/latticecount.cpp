#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lattice/dedekind.hpp"
#include "lattice/polygon.hpp"
#include "lattice/verify.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

// exit codes shared by the counting commands
constexpr int kExitParse = 2;
constexpr int kExitInvalidPolygon = 3;
constexpr int kExitInvalidArgument = 4;
constexpr int kExitNotCoprime = 5;

lattice::RationalPolygon load_polygon(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw lattice::ParseError("cannot open file: " + path);
    auto vertices = lattice::parse_polygon_text(in);
    return lattice::RationalPolygon::validate(std::move(vertices));
}

int run_count(const std::string& file, const std::string& t_text, const std::string& mode,
              bool json) {
    lattice::Integer t;
    try {
        t = lattice::parse_integer(t_text);
    } catch (const lattice::ParseError& e) {
        std::cerr << "error: invalid t: " << e.what() << "\n";
        return kExitInvalidArgument;
    }
    if (t < 1) {
        std::cerr << "error: t must be >= 1\n";
        return kExitInvalidArgument;
    }
    lattice::RationalPolygon P = [&] {
        try {
            return load_polygon(file);
        } catch (const lattice::ParseError& e) {
            std::cerr << "error: " << e.what() << "\n";
            std::exit(kExitParse);
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: invalid polygon: " << e.what() << "\n";
            std::exit(kExitInvalidPolygon);
        }
    }();
    lattice::Integer n;
    if (mode == "interior")
        n = lattice::count_interior(P, t);
    else if (mode == "boundary")
        n = lattice::count_boundary(P, t);
    else
        n = lattice::count_closure(P, t);
    if (json) {
        nlohmann::json out;
        out["count"] = n.get_str();
        out["mode"] = mode;
        out["t"] = t.get_str();
        std::cout << out.dump() << "\n";
    } else {
        std::cout << n.get_str() << "\n";
    }
    return 0;
}

int run_ehrhart(const std::string& file, bool json) {
    lattice::RationalPolygon P = [&] {
        try {
            return load_polygon(file);
        } catch (const lattice::ParseError& e) {
            std::cerr << "error: " << e.what() << "\n";
            std::exit(kExitParse);
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: invalid polygon: " << e.what() << "\n";
            std::exit(kExitInvalidPolygon);
        }
    }();
    lattice::QuasiPolynomial2 Q = lattice::ehrhart(P);
    if (json) {
        nlohmann::json out;
        out["period"] = Q.period.get_str();
        out["c2"] = Q.c2.str();
        nlohmann::json c1 = nlohmann::json::array(), c0 = nlohmann::json::array();
        for (const auto& r : Q.c1) c1.push_back(r.str());
        for (const auto& r : Q.c0) c0.push_back(r.str());
        out["c1"] = c1;
        out["c0"] = c0;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "period: " << Q.period.get_str() << "\n";
        std::cout << "c2: " << Q.c2.str() << "\n";
        for (std::size_t r = 0; r < Q.c1.size(); ++r)
            std::cout << "r=" << r << ": c1=" << Q.c1[r].str() << " c0=" << Q.c0[r].str() << "\n";
    }
    return 0;
}

int run_sigma(const std::string& a_text, const std::string& b_text, const std::string& t_text,
              bool naive) {
    lattice::Integer a, b;
    lattice::Rational t;
    try {
        a = lattice::parse_integer(a_text);
        b = lattice::parse_integer(b_text);
        t = lattice::Rational::parse(t_text);
    } catch (const lattice::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    if (b < 1) {
        std::cerr << "error: b must be >= 1\n";
        return kExitInvalidArgument;
    }
    try {
        lattice::Rational s = naive ? lattice::sigma_naive(a, b, t) : lattice::sigma_fast(a, b, t);
        std::cout << s.str() << "\n";
    } catch (const lattice::NotCoprime& e) {
        std::cerr << "error: " << e.what() << " (use --naive for non-coprime arguments)\n";
        return kExitNotCoprime;
    }
    return 0;
}

int run_verify(const lattice::VerifySuiteConfig& config) {
    lattice::SuiteReport report = lattice::run_suite(config);
    std::cout << report.passes << "/" << config.trials << " pass\n";
    if (report.numeric) {
        std::cout.precision(3);
        std::cout << "max deviation: " << std::scientific << report.max_deviation << "\n";
    }
    if (report.fails > 0) {
        std::cout << "first failure: " << report.first_failure << "\n";
        std::cout << "reproduce: latticecount verify --suite " << config.suite << " --trials "
                  << config.trials << " --seed " << config.seed << " --max-size "
                  << config.max_size << "\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact lattice-point counting for dilates of rational polygons"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    // count
    auto* count = app.add_subcommand("count", "Count lattice points in a dilated polygon");
    std::string count_file, count_t;
    bool flag_closure = false, flag_interior = false, flag_boundary = false, count_json = false;
    count->add_option("file", count_file, "polygon file")->required();
    count->add_option("-t,--dilation", count_t, "integer dilation factor (>= 1)")->required();
    auto* oc = count->add_flag("--closure", flag_closure, "count the closed dilate (default)");
    auto* oi = count->add_flag("--interior", flag_interior, "count the open interior");
    auto* ob = count->add_flag("--boundary", flag_boundary, "count boundary points");
    oc->excludes(oi)->excludes(ob);
    oi->excludes(ob);
    count->add_flag("--json", count_json, "emit JSON");

    // ehrhart
    auto* ehr = app.add_subcommand("ehrhart", "Extract the Ehrhart quasipolynomial");
    std::string ehr_file;
    bool ehr_json = false, ehr_text = false;
    ehr->add_option("file", ehr_file, "polygon file")->required();
    ehr->add_flag("--json", ehr_json, "emit JSON");
    ehr->add_flag("--text", ehr_text, "plain text output (default)");

    // sigma
    auto* sig = app.add_subcommand("sigma", "Evaluate the Dedekind-Rademacher sum sigma(a,b,t)");
    std::string sig_a, sig_b, sig_t;
    bool sig_naive = false;
    sig->add_option("a", sig_a, "first argument")->required();
    sig->add_option("b", sig_b, "modulus (>= 1)")->required();
    sig->add_option("t", sig_t, "rational shift, e.g. 3 or -5/7")->required();
    sig->add_flag("--naive", sig_naive, "direct O(b) summation (no coprimality requirement)");

    // verify
    auto* ver = app.add_subcommand("verify", "Run a randomized verification suite");
    lattice::VerifySuiteConfig config;
    ver->add_option("--suite", config.suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"dedekind", "rademacher", "unified", "gessel", "fourier",
                               "oracle-triangle", "oracle-polygon", "ehrhart"}));
    ver->add_option("--trials", config.trials, "number of trials")->check(CLI::PositiveNumber);
    ver->add_option("--seed", config.seed, "RNG seed");
    ver->add_option("--max-size", config.max_size, "size bound for drawn parameters")
        ->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*count)
            return run_count(count_file, count_t, flag_interior   ? "interior"
                                                  : flag_boundary ? "boundary"
                                                                  : "closure",
                             count_json);
        if (*ehr) return run_ehrhart(ehr_file, ehr_json);
        if (*sig) return run_sigma(sig_a, sig_b, sig_t, sig_naive);
        if (*ver) return run_verify(config);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
