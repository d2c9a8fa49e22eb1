#include "lattice/fourier_verify.hpp"

#include <cmath>
#include <numbers>

namespace lattice {

namespace {

long floor_div_long(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// lambda^e for |e| possibly large: reduce mod the root's order N first.
ComplexApprox root_pow(long k, long N, long e) {
    long r = ((e % N) + N) % N;
    return root_of_unity((k * r) % N, N);
}

} // namespace

ComplexApprox root_of_unity(long k, long N) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(k % N) / static_cast<double>(N);
    return {std::cos(angle), std::sin(angle)};
}

ComplexApprox roots_sum_simple(long p, long t) {
    ComplexApprox sum = 0.0;
    for (long k = 1; k < p; ++k) {
        ComplexApprox lam = root_of_unity(k, p);
        sum += root_pow(k, p, t) / (lam - 1.0);
    }
    return sum / static_cast<double>(p);
}

ComplexApprox roots_sum_keycor(long c, long p, long q, long t) {
    ComplexApprox sum = 0.0;
    long N = c * p;
    for (long k = 0; k < N; ++k) {
        if ((k * c) % N == 0) continue; // lambda^c = 1
        ComplexApprox lam_cq = root_of_unity((k * (c * q)) % N, N);
        sum += root_pow(k, N, t) / (1.0 - lam_cq);
    }
    return sum / static_cast<double>(N);
}

ComplexApprox roots_sum_dedekind(long c, long p, long q, long t) {
    ComplexApprox sum = 0.0;
    long N = c * p;
    for (long k = 0; k < N; ++k) {
        if ((k * c) % N == 0) continue;
        ComplexApprox lam = root_of_unity(k, N);
        ComplexApprox lam_cq = root_of_unity((k * (c * q)) % N, N);
        sum += root_pow(k, N, -t) / ((1.0 - lam_cq) * (1.0 - lam));
    }
    return sum / static_cast<double>(N);
}

std::pair<ComplexApprox, ComplexApprox> convolution_check(long N,
                                                          const std::vector<ComplexApprox>& coeffs_a,
                                                          const std::vector<ComplexApprox>& coeffs_b,
                                                          long t) {
    if (static_cast<long>(coeffs_a.size()) != N || static_cast<long>(coeffs_b.size()) != N)
        throw LengthMismatch("coefficient lists must have length N");
    auto series = [&](const std::vector<ComplexApprox>& coeffs, long arg) {
        ComplexApprox s = 0.0;
        for (long k = 0; k < N; ++k) s += coeffs[k] * root_pow(k, N, arg);
        return s / static_cast<double>(N);
    };
    ComplexApprox lhs = 0.0;
    for (long k = 0; k < N; ++k) lhs += coeffs_a[k] * coeffs_b[k] * root_pow(k, N, t);
    lhs /= static_cast<double>(N);
    ComplexApprox rhs = 0.0;
    for (long m = 0; m < N; ++m) rhs += series(coeffs_a, t - m) * series(coeffs_b, m);
    return {lhs, rhs};
}

std::pair<ComplexApprox, ComplexApprox> laurent_leading_pair(long a, long b, long lambda_index) {
    ComplexApprox lam = root_of_unity(lambda_index, a);
    double ab = static_cast<double>(a) * static_cast<double>(b);
    return {-lam / ab, (ab - 1.0) / (2.0 * ab)};
}

double closure_count_fourier(long a, long b, long d, long c, long p, long q, long r, long t) {
    long u = (floor_div_long(t * a - 1, d) + 1) * c * p;
    long v = (floor_div_long(t * b - 1, d) + 1) * c * q;
    double cp = static_cast<double>(c * p), cq = static_cast<double>(c * q);
    double c2pq = static_cast<double>(c) * c * p * q;
    double w = static_cast<double>(t * r - u - v);

    double poly = w * w / (2.0 * c2pq) + 0.5 * w * (1.0 / cp + 1.0 / cq + 1.0 / c2pq) +
                  0.25 * (1.0 + 1.0 / cp + 1.0 / cq) +
                  (static_cast<double>(p) / q + static_cast<double>(q) / p + 1.0 / c2pq) / 12.0;

    // sums over nontrivial c-th roots of unity
    ComplexApprox s1 = 0.0, s2 = 0.0;
    for (long k = 1; k < c; ++k) {
        ComplexApprox lam = root_of_unity(k, c);
        ComplexApprox den = 1.0 - lam;
        s1 += root_pow(k, c, -t * r) / den;
        s2 += root_pow(k, c, -t * r + 1) / (den * den);
    }
    ComplexApprox mid = (1.0 / (2.0 * cp) + 1.0 / (2.0 * cq) - (u + v - t * r) / c2pq) * s1 -
                        s2 / c2pq;

    ComplexApprox s3 = roots_sum_dedekind(c, p, q, t * r - v);
    ComplexApprox s4 = roots_sum_dedekind(c, q, p, t * r - u);

    return poly + mid.real() + s3.real() + s4.real();
}

} // namespace lattice
