#include "lattice/dedekind.hpp"

namespace lattice {

namespace {

void require_modulus(const Integer& b) {
    if (b < 1) throw InvalidModulus("modulus must be >= 1");
}

void require_coprime(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (g != 1) throw NotCoprime("arguments must be coprime");
}

Rational inv(const Integer& n) { return Rational(Integer(1), n); }

} // namespace

Rational sigma_naive(const Integer& a, const Integer& b, const Rational& t) {
    require_modulus(b);
    Rational sum(0);
    for (Integer k = 0; k < b; ++k) {
        sum += sawtooth(Rational(a * k, 1) / Rational(b) + t / Rational(b)) *
               sawtooth(Rational(k, b));
    }
    return sum;
}

Rational sigma_one_closed(const Integer& p, const Rational& t) {
    require_modulus(p);
    Rational s = sawtooth(t / Rational(p));
    return Rational(-p, 24) + Rational(Integer(1), 6 * p) + Rational(p, 2) * s * s;
}

namespace {

// Gessel RHS assembled over the common denominator 24pq in one pass, with no
// argument validation (the descent guarantees coprime p,q and t' in [1,p+q]).
Rational gessel_rhs_unchecked(const Integer& p, const Integer& q, const Integer& t) {
    Integer mt = -t, fp, fq;
    mpz_fdiv_r(fp.get_mpz_t(), mt.get_mpz_t(), p.get_mpz_t());
    mpz_fdiv_r(fq.get_mpz_t(), mt.get_mpz_t(), q.get_mpz_t());
    Integer num = 12 * t * t - 12 * t * (p + q + 1) + 2 * (p * p + q * q + 1) +
                  30 * p * q - 24 * q * fp - 24 * p * fq;
    return Rational(num, 24 * p * q);
}

// Integer-argument descent. Expects b >= 1; reduces a and t mod b itself.
// Coprimality is checked only at the first level: gcd(b mod a, a) = gcd(a, b).
Rational sigma_fast_int(Integer a, Integer b, Integer t, int& depth) {
    ++depth;
    mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), b.get_mpz_t());
    if (a == 0) return -sawtooth(Rational(t, b)) / Rational(2);
    if (b == 1) return Rational(1, 4); // single term ((t))((0)) with t integer
    if (a == 1) return sigma_one_closed(b, Rational(t));
    if (depth == 1) require_coprime(a, b);
    // t' in [1, b] with -t' == t (mod b); Gessel RHS with (p,q) = (b,a) gives
    // sigma(a,b,-t') + sigma(b,a,-t').
    Integer tp = (t == 0) ? b : Integer(b - t);
    return gessel_rhs_unchecked(b, a, tp) - sigma_fast_int(b, a, -tp, depth);
}

} // namespace

Rational sigma_fast_depth(const Integer& a, const Integer& b, const Rational& t, int& depth) {
    require_modulus(b);
    // Reduce t into [0, b), then strip its fractional part:
    // sigma(a,b,t) = sigma(a,b,[t]) - {t}/(2b).
    Rational tr = t - Rational(b) * Rational(floor_int(t / Rational(b)));
    Integer ti = floor_int(tr);
    Rational fr = tr - Rational(ti);
    Rational correction = -fr / Rational(2 * b);
    depth = 0;
    return sigma_fast_int(a, b, ti, depth) + correction;
}

Rational sigma_fast(const Integer& a, const Integer& b, const Rational& t) {
    int depth = 0;
    return sigma_fast_depth(a, b, t, depth);
}

Rational rademacher_S(const Integer& a, const Integer& b, const Rational& x, const Rational& y) {
    require_modulus(b);
    Rational sum(0);
    for (Integer k = 0; k < b; ++k) {
        Rational ky = (Rational(k) + y) / Rational(b);
        sum += sawtooth_star(Rational(a) * ky + x) * sawtooth_star(ky);
    }
    return sum / Rational(b);
}

Rational frak_s(const Integer& a, const Integer& b, const Rational& x, const Rational& y) {
    require_modulus(b);
    Rational sum(0);
    for (Integer k = 0; k < b; ++k) {
        Rational ky = (Rational(k) + y) / Rational(b);
        sum += sawtooth(Rational(a) * ky + x) * sawtooth(ky);
    }
    return sum;
}

Rational sigma_from_S(const Integer& a, const Integer& b, const Rational& t) {
    require_modulus(b);
    Rational tb = t / Rational(b);
    // b * S undoes the 1/b prefactor of the printed definition; the remaining
    // terms account for the starred-vs-unstarred sawtooth at the summation
    // indices where an argument is an integer: always k = 0, and, for integer
    // t, every k with b | ak + t.
    Rational base = Rational(b) * rademacher_S(a, b, tb, Rational(0)) - sawtooth(tb) / Rational(2);
    if (!t.is_integer()) return base;
    Integer am, g;
    mpz_fdiv_r(am.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (am == 0)
        g = b;
    else
        mpz_gcd(g.get_mpz_t(), am.get_mpz_t(), b.get_mpz_t());
    Integer ti = t.num();
    if (ti % g != 0) return base;
    // Solutions of a*k == -t (mod b): k = k0 + j*(b/g), j = 0..g-1, and the
    // sawtooth values over that coset sum to ((g*k0/b)).
    Integer bg = b / g;
    Integer k0 = 0;
    if (bg != 1) {
        Integer ainv = mod_inverse(am / g, bg);
        mpz_fdiv_r(k0.get_mpz_t(), Integer(-(ti / g) * ainv).get_mpz_t(), bg.get_mpz_t());
    }
    Rational hits = sawtooth(Rational(g * k0, b));
    if (k0 == 0) hits += Rational(1, 2); // drop the k = 0 solution, already counted
    return base - hits / Rational(2);
}

Rational dedekind_reciprocity_rhs(const Integer& a, const Integer& b) {
    if (a < 1 || b < 1) throw InvalidModulus("arguments must be >= 1");
    require_coprime(a, b);
    return Rational(-1, 4) +
           (Rational(a, b) + Rational(Integer(1), a * b) + Rational(b, a)) / Rational(12);
}

Rational rademacher_reciprocity_rhs(const Integer& a, const Integer& b,
                                    const Rational& x, const Rational& y) {
    if (a < 1 || b < 1) throw InvalidModulus("arguments must be >= 1");
    require_coprime(a, b);
    if (x.is_integer() && y.is_integer()) return dedekind_reciprocity_rhs(a, b);
    Rational ab(a, b), ba(b, a), iab(Integer(1), a * b);
    return sawtooth_star(x) * sawtooth_star(y) +
           (ab * psi2(y) + iab * psi2(Rational(a) * y + Rational(b) * x) + ba * psi2(x)) /
               Rational(2);
}

Rational unified_reciprocity_rhs(const Integer& p, const Integer& q, const Rational& t) {
    if (p < 1 || q < 1) throw InvalidModulus("arguments must be >= 1");
    require_coprime(p, q);
    if (t < Rational(1) || t > Rational(p + q))
        throw OutOfRange("t must lie in [1, p+q]");
    Rational m(floor_int(-t)); // [-t]
    Rational ip = inv(p), iq = inv(q), ipq(Integer(1), p * q);
    return m * m * ipq / Rational(2) + m * (ip + iq + ipq) / Rational(2) + Rational(1, 4) +
           (Rational(p, q) + ipq + Rational(q, p)) / Rational(12) -
           sawtooth(m * ip) - sawtooth(m * iq) -
           sawtooth(-t) * (ip + iq) / Rational(2) - ip / Rational(4) - iq / Rational(4);
}

Rational gessel_sigma_rhs(const Integer& p, const Integer& q, const Integer& t) {
    if (p < 1 || q < 1) throw InvalidModulus("arguments must be >= 1");
    require_coprime(p, q);
    if (t < 1 || t > p + q) throw OutOfRange("t must lie in [1, p+q]");
    Rational tt(t);
    Rational ip = inv(p), iq = inv(q), ipq(Integer(1), p * q);
    return tt * tt * ipq / Rational(2) - tt * (ip + iq + ipq) / Rational(2) + Rational(1, 4) +
           (Rational(p, q) + ipq + Rational(q, p)) / Rational(12) -
           sawtooth(-tt * ip) - sawtooth(-tt * iq);
}

} // namespace lattice
