#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lattice/dedekind.hpp"

using namespace lattice;

namespace {

bool coprime(long a, long b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), Integer(a).get_mpz_t(), Integer(b).get_mpz_t());
    return g == 1;
}

} // namespace

TEST_CASE("sigma_naive fixed values") {
    CHECK(sigma_naive(1, 1, Rational(0)) == Rational(1, 4));
    CHECK(sigma_naive(1, 2, Rational(0)) == Rational(1, 4));
    CHECK(sigma_naive(3, 5, Rational(0)) == Rational(1, 4));
    CHECK(sigma_naive(0, 7, Rational(2)) == Rational(3, 28));
    CHECK(sigma_naive(2, 3, Rational(1)) == Rational(7, 36));
    CHECK_THROWS_AS(sigma_naive(1, 0, Rational(0)), InvalidModulus);
}

TEST_CASE("sigma_one_closed") {
    CHECK(sigma_one_closed(1, Rational(0)) == Rational(1, 4));
    CHECK(sigma_one_closed(2, Rational(0)) == sigma_naive(1, 2, Rational(0)));
    CHECK(sigma_one_closed(5, Rational(3)) ==
          Rational(-5, 24) + Rational(1, 30) + Rational(5, 2) * Rational(1, 100));
    CHECK(sigma_one_closed(5, Rational(3)) == sigma_naive(1, 5, Rational(3)));
    for (long p = 1; p <= 30; ++p)
        for (long t = -p; t <= 2 * p; ++t)
            CHECK(sigma_one_closed(p, Rational(t)) == sigma_naive(1, p, Rational(t)));
    CHECK_THROWS_AS(sigma_one_closed(0, Rational(0)), InvalidModulus);
}

TEST_CASE("sigma_fast fixed values") {
    CHECK(sigma_fast(3, 5, Rational(0)) == Rational(1, 4));
    Integer big = Integer(1000000) + 3;
    CHECK(sigma_fast(1, big, Rational(17)) == sigma_one_closed(big, Rational(17)));
    CHECK(sigma_fast(0, 7, Rational(2)) == Rational(3, 28));
    CHECK_THROWS_AS(sigma_fast(1, 0, Rational(0)), InvalidModulus);
    // Non-coprime reduced arguments are rejected on the fast path.
    CHECK_THROWS_AS(sigma_fast(4, 6, Rational(0)), NotCoprime);
}

TEST_CASE("sigma_fast equals sigma_naive on a dense grid") {
    const Rational extra[] = {Rational(1, 2), Rational(7, 3), Rational(-5, 4)};
    for (long b = 1; b <= 60; ++b)
        for (long a = 0; a < b || (b == 1 && a == 0); ++a) {
            if (b > 1 && !coprime(a, b)) continue;
            for (long t = 0; t < b; ++t)
                CHECK(sigma_fast(a, b, Rational(t)) == sigma_naive(a, b, Rational(t)));
            for (const Rational& t : extra)
                CHECK(sigma_fast(a, b, t) == sigma_naive(a, b, t));
            if (b == 1) break;
        }
}

TEST_CASE("sigma periodicity and fractional-part reduction") {
    for (long b = 1; b <= 25; ++b)
        for (long a = 0; a < b || b == 1; ++a) {
            for (long den = 1; den <= 6; ++den) {
                Rational t(2 * den + 1, den);
                CHECK(sigma_naive(a, b, t + Rational(b)) == sigma_naive(a, b, t));
                Rational ti(floor_int(t));
                CHECK(sigma_naive(a, b, t) ==
                      sigma_naive(a, b, ti) - frac(t) / Rational(2 * b));
            }
            if (b == 1) break;
        }
}

TEST_CASE("rademacher_S fixed values") {
    // Printed definition carries a 1/b prefactor; summation gives 1/54 at (1,3,0,0).
    CHECK(rademacher_S(1, 3, Rational(0), Rational(0)) == Rational(1, 54));
    for (long a = 1; a <= 5; ++a)
        CHECK(rademacher_S(a, 1, Rational(0), Rational(0)) == Rational(0));
    CHECK_THROWS_AS(rademacher_S(1, 0, Rational(0), Rational(0)), InvalidModulus);
}

TEST_CASE("frak_s and the sigma links") {
    CHECK(frak_s(1, 1, Rational(0), Rational(0)) == Rational(1, 4));
    // sigma(a,b,t) = frak_s(a,b; t/b, 0): the y = 0 case of the inverse link
    CHECK(frak_s(3, 5, Rational(0, 5), Rational(0)) == sigma_naive(3, 5, Rational(0)));
    for (long b = 1; b <= 20; ++b)
        for (long a = 1; a <= 8; ++a)
            for (long t = 0; t < 3; ++t)
                CHECK(frak_s(a, b, Rational(t, b), Rational(0)) ==
                      sigma_naive(a, b, Rational(t)));
    // Inverse link: frak_s(a,b,x,y) = sigma(a,b, ay+bx) + (y/b) * ((ya+xb)).
    {
        Integer a = 2, b = 3;
        Rational x(1, 2), y(1, 3);
        Rational arg = Rational(a) * y + Rational(b) * x; // 13/6
        CHECK(frak_s(a, b, x, y) == Rational(-11, 54));
        CHECK(frak_s(a, b, x, y) ==
              sigma_naive(a, b, arg) + y / Rational(b) * sawtooth(arg));
    }
}

TEST_CASE("sigma_from_S equals sigma_naive") {
    CHECK(sigma_from_S(1, 1, Rational(0)) == Rational(1, 4));
    CHECK(sigma_from_S(3, 5, Rational(0)) == Rational(1, 4));
    CHECK(sigma_from_S(2, 3, Rational(1)) == sigma_naive(2, 3, Rational(1)));
    for (long b = 1; b <= 30; ++b)
        for (long a = 0; a <= b; ++a) {
            for (long t = -2; t <= b; ++t)
                CHECK(sigma_from_S(a, b, Rational(t)) == sigma_naive(a, b, Rational(t)));
            CHECK(sigma_from_S(a, b, Rational(1, 2)) == sigma_naive(a, b, Rational(1, 2)));
            if (b == 1 && a == 1) break;
        }
}

TEST_CASE("dedekind reciprocity") {
    CHECK(dedekind_reciprocity_rhs(1, 1) == Rational(0));
    CHECK(dedekind_reciprocity_rhs(2, 3) == Rational(-1, 18));
    CHECK_THROWS_AS(dedekind_reciprocity_rhs(4, 6), NotCoprime);
    for (long a = 1; a <= 40; ++a)
        for (long b = 1; b <= 40; ++b) {
            if (!coprime(a, b)) continue;
            Rational lhs = Rational(b) * rademacher_S(a, b, Rational(0), Rational(0)) +
                           Rational(a) * rademacher_S(b, a, Rational(0), Rational(0));
            CHECK(lhs == dedekind_reciprocity_rhs(a, b));
        }
}

TEST_CASE("rademacher reciprocity") {
    CHECK(rademacher_reciprocity_rhs(2, 3, Rational(0), Rational(0)) == Rational(-1, 18));
    CHECK(rademacher_reciprocity_rhs(1, 1, Rational(1, 2), Rational(1, 2)) == Rational(0));
    const Rational grid[] = {Rational(0), Rational(1, 2), Rational(1, 3), Rational(2, 3),
                             Rational(1, 4)};
    for (long a = 1; a <= 12; ++a)
        for (long b = 1; b <= 12; ++b) {
            if (!coprime(a, b)) continue;
            for (const Rational& x : grid)
                for (const Rational& y : grid) {
                    Rational lhs = Rational(b) * rademacher_S(a, b, x, y) +
                                   Rational(a) * rademacher_S(b, a, y, x);
                    CHECK(lhs == rademacher_reciprocity_rhs(a, b, x, y));
                }
        }
}

TEST_CASE("unified reciprocity") {
    CHECK(unified_reciprocity_rhs(1, 1, Rational(2)) == Rational(1, 2));
    CHECK(unified_reciprocity_rhs(2, 3, Rational(1)) ==
          sigma_naive(3, 2, Rational(-1)) + sigma_naive(2, 3, Rational(-1)));
    CHECK(unified_reciprocity_rhs(2, 3, Rational(3, 2)) ==
          sigma_naive(3, 2, Rational(-3, 2)) + sigma_naive(2, 3, Rational(-3, 2)));
    CHECK_THROWS_AS(unified_reciprocity_rhs(2, 3, Rational(6)), OutOfRange);
    for (long p = 1; p <= 15; ++p)
        for (long q = 1; q <= 15; ++q) {
            if (!coprime(p, q)) continue;
            for (long num = 2; num <= 2 * (p + q); num += 3) {
                Rational t(num, 2);
                if (t < Rational(1) || t > Rational(p + q)) continue;
                CHECK(unified_reciprocity_rhs(p, q, t) ==
                      sigma_naive(q, p, -t) + sigma_naive(p, q, -t));
            }
        }
}

TEST_CASE("gessel sigma reciprocity") {
    CHECK(gessel_sigma_rhs(2, 3, 1) ==
          sigma_naive(3, 2, Rational(-1)) + sigma_naive(2, 3, Rational(-1)));
    CHECK(gessel_sigma_rhs(1, 2, 3) ==
          sigma_naive(2, 1, Rational(-3)) + sigma_naive(1, 2, Rational(-3)));
    CHECK(gessel_sigma_rhs(3, 5, 8) ==
          sigma_naive(5, 3, Rational(-8)) + sigma_naive(3, 5, Rational(-8)));
    CHECK_THROWS_AS(gessel_sigma_rhs(2, 3, 0), OutOfRange);
    for (long p = 1; p <= 15; ++p)
        for (long q = 1; q <= 15; ++q) {
            if (!coprime(p, q)) continue;
            for (long t = 1; t <= p + q; ++t)
                CHECK(gessel_sigma_rhs(p, q, t) ==
                      sigma_naive(q, p, Rational(-t)) + sigma_naive(p, q, Rational(-t)));
        }
}

TEST_CASE("sigma_fast recursion depth is Euclidean") {
    for (long b = 2; b <= 200; b += 7)
        for (long a = 1; a < b; a += 3) {
            if (!coprime(a, b)) continue;
            // Count Euclidean steps on (a, b).
            long steps = 0, x = b, y = a;
            while (y != 0) {
                long r = x % y;
                x = y;
                y = r;
                ++steps;
            }
            int depth = 0;
            sigma_fast_depth(a, b, Rational(5), depth);
            CHECK(depth <= 2 * steps + 4);
        }
}

TEST_CASE("sigma_one_closed at rational t: recorded probe") {
    // The closed form is only relied on for integer t; this probe records how
    // it behaves at rational t without asserting agreement.
    int agree = 0, total = 0;
    for (long p = 1; p <= 12; ++p)
        for (long num = 1; num <= 7; num += 2) {
            Rational t(num, 2);
            ++total;
            if (sigma_one_closed(p, t) == sigma_naive(1, p, t)) ++agree;
        }
    MESSAGE("closed form at half-integer t agrees in ", agree, "/", total, " cases");
    CHECK(total > 0);
}
