#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "lattice/errors.hpp"

namespace lattice {

// Floating-point evaluation of the finite root-of-unity sums. This module is
// verification-only: no exact count ever flows through it.

using ComplexApprox = std::complex<double>;

struct LengthMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// k-th N-th root of unity, exp(2*pi*i*k/N).
ComplexApprox root_of_unity(long k, long N);

/// (1/p) sum over nontrivial p-th roots of unity of lambda^t / (lambda - 1).
/// Empty sum (0) for p = 1.
ComplexApprox roots_sum_simple(long p, long t);

/// (1/(cp)) sum over lambda^(cp)=1, lambda^c != 1 of lambda^t / (1 - lambda^(cq)).
ComplexApprox roots_sum_keycor(long c, long p, long q, long t);

/// (1/(cp)) sum over lambda^(cp)=1, lambda^c != 1 of
/// lambda^(-t) / ((1 - lambda^(cq)) (1 - lambda)).
ComplexApprox roots_sum_dedekind(long c, long p, long q, long t);

/// Both sides of the finite-Fourier convolution identity:
/// lhs = (1/N) sum a_l b_l l^t, rhs = sum_m f(t-m) g(m).
std::pair<ComplexApprox, ComplexApprox> convolution_check(long N,
                                                          const std::vector<ComplexApprox>& coeffs_a,
                                                          const std::vector<ComplexApprox>& coeffs_b,
                                                          long t);

/// Order-(-1) and order-0 Laurent coefficients of 1/(1-z^(ab)) at the
/// lambda_index-th a-th root of unity: (-lambda/(ab), (ab-1)/(2ab)).
std::pair<ComplexApprox, ComplexApprox> laurent_leading_pair(long a, long b, long lambda_index);

/// Numeric evaluation of the root-of-unity closure-count formula for the
/// right triangle {x >= a/d, y >= b/d, cpx + cqy <= r} dilated by t.
double closure_count_fourier(long a, long b, long d, long c, long p, long q, long r, long t);

} // namespace lattice
