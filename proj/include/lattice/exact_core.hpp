#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>
#include <tuple>

#include "lattice/errors.hpp"

namespace lattice {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Exact rational number, always stored canonically:
/// denominator > 0 and gcd(|num|, den) = 1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(const Integer& n) : q_(n) {}
    Rational(long n) : q_(n) {}
    Rational(int n) : q_(static_cast<long>(n)) {}
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    /// Accepts unevaluated integer expression templates (e.g. Rational(2 * b)).
    template <class E>
    Rational(const __gmp_expr<mpz_t, E>& e) : q_(Integer(e)) {}

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }

    bool is_integer() const { return q_.get_den() == 1; }
    bool is_zero() const { return q_ == 0; }
    int sign() const { return sgn(q_); }

    /// Parses "-3/4", "5", "+7/2"; arbitrary-precision digits.
    static Rational parse(std::string_view text);

    /// "-3/4"; denominator-1 values print as bare integers.
    std::string str() const;

    double to_float_approx() const { return q_.get_d(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& b) { q_ += b.q_; return *this; }
    Rational& operator-=(const Rational& b) { q_ -= b.q_; return *this; }
    Rational& operator*=(const Rational& b) { q_ *= b.q_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class q_;
};

/// Greatest integer <= x.
Integer floor_int(const Rational& x);

/// x - floor(x), in [0, 1).
Rational frac(const Rational& x);

/// Sawtooth ((x)) = x - [x] - 1/2, in [-1/2, 1/2).
Rational sawtooth(const Rational& x);

/// Starred sawtooth: 0 at integers, ((x)) elsewhere.
Rational sawtooth_star(const Rational& x);

/// Periodic second Bernoulli polynomial {x}^2 - {x} + 1/6.
Rational psi2(const Rational& x);

/// Returns (g, s, u) with g = gcd(a,b) >= 0 and s*a + u*b = g.
std::tuple<Integer, Integer, Integer> extended_gcd(const Integer& a, const Integer& b);

/// Unique w in [0, p) with q*w == 1 (mod p); mod_inverse(_, 1) = 0.
/// Throws NotCoprime when gcd(q, p) != 1.
Integer mod_inverse(const Integer& q, const Integer& p);

/// Floor division helper: floor(a/b) for b > 0.
Integer floor_div(const Integer& a, const Integer& b);

/// Parses an arbitrary-precision integer; throws ParseError.
Integer parse_integer(std::string_view text);

} // namespace lattice
