#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lattice/exact_core.hpp"

#include <sstream>

using namespace lattice;

TEST_CASE("Rational construction is canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(2, 4).num() == 1);
    CHECK(Rational(2, 4).den() == 2);
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(3, -6).den() == 2);
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(0, 7).num() == 0);
    CHECK(Rational(0, 7).den() == 1);
    CHECK(Rational(5).is_integer());
    CHECK_FALSE(Rational(1, 2).is_integer());
    CHECK(Rational(0).is_zero());
    CHECK(Rational(-3, 4).sign() == -1);
    CHECK(Rational(3, 4).sign() == 1);
    CHECK(Rational(0).sign() == 0);
    CHECK_THROWS(Rational(Integer(1), Integer(0)));
}

TEST_CASE("Rational arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(2, 3) / Rational(4, 5) == Rational(5, 6));
    CHECK(-Rational(1, 2) == Rational(-1, 2));
    CHECK_THROWS(Rational(1) / Rational(0));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
}

TEST_CASE("Rational parse and str round-trip") {
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("+7/2") == Rational(7, 2));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational(-3, 4).str() == "-3/4");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(10, 2).str() == "5");
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("a/b"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), ParseError);
    // Arbitrary precision
    std::string big(80, '9');
    Rational r = Rational::parse(big + "/7");
    CHECK(r.str() == big + "/7");
    std::ostringstream os;
    os << Rational(-7, 3);
    CHECK(os.str() == "-7/3");
}

TEST_CASE("floor") {
    CHECK(floor_int(Rational(7, 3)) == 2);
    CHECK(floor_int(Rational(-1, 4)) == -1);
    CHECK(floor_int(Rational(5)) == 5);
    CHECK(floor_int(Rational(-7, 3)) == -3);
}

TEST_CASE("frac") {
    CHECK(frac(Rational(7, 3)) == Rational(1, 3));
    CHECK(frac(Rational(-1, 4)) == Rational(3, 4));
    CHECK(frac(Rational(2)) == Rational(0));
}

TEST_CASE("sawtooth") {
    CHECK(sawtooth(Rational(0)) == Rational(-1, 2));
    CHECK(sawtooth(Rational(1, 2)) == Rational(0));
    CHECK(sawtooth(Rational(7, 3)) == Rational(-1, 6));
}

TEST_CASE("sawtooth_star") {
    CHECK(sawtooth_star(Rational(0)) == Rational(0));
    CHECK(sawtooth_star(Rational(1, 4)) == Rational(-1, 4));
    CHECK(sawtooth_star(Rational(-3)) == Rational(0));
}

TEST_CASE("psi2") {
    CHECK(psi2(Rational(0)) == Rational(1, 6));
    CHECK(psi2(Rational(1, 2)) == Rational(-1, 12));
    CHECK(psi2(Rational(7, 3)) == Rational(-1, 18));
}

TEST_CASE("extended_gcd") {
    auto [g1, s1, u1] = extended_gcd(6, 4);
    CHECK(g1 == 2);
    CHECK(s1 * 6 + u1 * 4 == 2);
    auto [g2, s2, u2] = extended_gcd(0, 5);
    CHECK(g2 == 5);
    CHECK(s2 * 0 + u2 * 5 == 5);
    auto [g3, s3, u3] = extended_gcd(7, 3);
    CHECK(g3 == 1);
    CHECK(s3 * 7 + u3 * 3 == 1);
    // negative inputs still give g >= 0 and a valid combination
    auto [g4, s4, u4] = extended_gcd(-6, 4);
    CHECK(g4 == 2);
    CHECK(s4 * -6 + u4 * 4 == 2);
}

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(3, 5) == 2);
    CHECK(mod_inverse(1, 7) == 1);
    CHECK(mod_inverse(5, 1) == 0);
    CHECK_THROWS_AS(mod_inverse(4, 6), NotCoprime);
    for (long p = 2; p <= 40; ++p)
        for (long q = 1; q < p; ++q) {
            Integer g;
            mpz_gcd(g.get_mpz_t(), Integer(q).get_mpz_t(), Integer(p).get_mpz_t());
            if (g != 1) continue;
            Integer w = mod_inverse(q, p);
            CHECK(w >= 0);
            CHECK(w < p);
            CHECK((q * w) % p == 1);
        }
}

TEST_CASE("floor_div and parse_integer") {
    CHECK(floor_div(7, 3) == 2);
    CHECK(floor_div(-7, 3) == -3);
    CHECK(floor_div(-1, 1) == -1);
    CHECK(parse_integer("-42") == -42);
    CHECK(parse_integer("0") == 0);
    CHECK_THROWS_AS(parse_integer("12x"), ParseError);
    CHECK_THROWS_AS(parse_integer(""), ParseError);
}

TEST_CASE("periodicity of sawtooth variants and psi2") {
    const Rational xs[] = {Rational(0),     Rational(1, 2), Rational(-1, 4),
                           Rational(7, 3),  Rational(5, 7), Rational(-9, 5)};
    for (const Rational& x : xs)
        for (long n = -3; n <= 3; ++n) {
            Rational xn = x + Rational(n);
            CHECK(sawtooth(xn) == sawtooth(x));
            CHECK(sawtooth_star(xn) == sawtooth_star(x));
            CHECK(psi2(xn) == psi2(x));
        }
}

TEST_CASE("sawtooth distribution identity") {
    // sum_{m=0}^{p-1} (((m+x)/p)) = ((x)) for p <= 50, den(x) <= 20
    for (long p = 1; p <= 50; ++p)
        for (long den = 1; den <= 20; ++den)
            for (long num : {-den - 1L, -1L, 0L, 1L, den / 2, den + 3}) {
                Rational x(num, den);
                Rational sum(0);
                for (long m = 0; m < p; ++m)
                    sum += sawtooth((Rational(m) + x) / Rational(p));
                CHECK(sum == sawtooth(x));
            }
}

TEST_CASE("starred-unstarred relation and oddness") {
    for (long den = 1; den <= 12; ++den)
        for (long num = -2 * den; num <= 2 * den; ++num) {
            Rational x(num, den);
            Rational indicator = x.is_integer() ? Rational(1, 2) : Rational(0);
            CHECK(sawtooth_star(x) == sawtooth(x) + indicator);
            CHECK(sawtooth_star(-x) == -sawtooth_star(x));
        }
}
