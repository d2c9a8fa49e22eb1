#include "lattice/exact_core.hpp"

#include <cctype>
#include <ostream>

namespace lattice {

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.q_ == 0) throw std::invalid_argument("Rational: division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Integer parse_integer(std::string_view text) {
    std::string_view body = text;
    bool neg = false;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
        neg = body[0] == '-';
        body.remove_prefix(1);
    }
    if (!all_digits(body))
        throw ParseError("invalid integer: '" + std::string(text) + "'");
    Integer v(std::string(body), 10);
    return neg ? Integer(-v) : v;
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_part = text.substr(slash + 1);
    if (!all_digits(den_part))
        throw ParseError("invalid rational: '" + std::string(text) + "'");
    Integer den(std::string(den_part), 10);
    if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    return Rational(num, den);
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer floor_int(const Rational& x) {
    return floor_div(x.num(), x.den());
}

Rational frac(const Rational& x) {
    return x - Rational(floor_int(x));
}

Rational sawtooth(const Rational& x) {
    return frac(x) - Rational(1, 2);
}

Rational sawtooth_star(const Rational& x) {
    if (x.is_integer()) return Rational(0);
    return sawtooth(x);
}

Rational psi2(const Rational& x) {
    Rational f = frac(x);
    return f * f - f + Rational(1, 6);
}

std::tuple<Integer, Integer, Integer> extended_gcd(const Integer& a, const Integer& b) {
    Integer g, s, u;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return {g, s, u};
}

Integer mod_inverse(const Integer& q, const Integer& p) {
    if (p < 1) throw InvalidModulus("mod_inverse: modulus must be >= 1");
    if (p == 1) return 0;
    Integer w;
    if (mpz_invert(w.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t()) == 0)
        throw NotCoprime("mod_inverse: arguments not coprime");
    return w;
}

} // namespace lattice
