#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lattice/polygon.hpp"

namespace lattice {

struct VerifySuiteConfig {
    std::string suite; // dedekind, rademacher, unified, gessel, fourier,
                       // oracle-triangle, oracle-polygon, ehrhart
    long trials = 100;
    std::uint64_t seed = 0;
    long max_size = 1000;
};

struct SuiteReport {
    long passes = 0;
    long fails = 0;
    std::string first_failure; // parameters of the first failing instance
    double max_deviation = 0;  // fourier suite only
    bool numeric = false;
};

/// Runs the named suite; trial i draws from a sub-generator derived from
/// (seed, i), so results are independent of execution order.
SuiteReport run_suite(const VerifySuiteConfig& config);

/// Deterministic splitmix64 stream; the per-trial generator of the suites.
class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t trial);

    std::uint64_t next();
    /// Uniform in [lo, hi], inclusive.
    long range(long lo, long hi);
    Rational rational(long num_lo, long num_hi, long den_hi);

private:
    std::uint64_t state_;
};

/// Random simple polygon: 3-8 vertices, numerators in [-5,5], denominators
/// in [1, max_den], angularly sorted around the centroid. Retries until
/// validation succeeds.
RationalPolygon random_polygon(TrialRng& rng, long max_den);

/// Random normalized right-triangle spec with d <= max_d, c <= max_c,
/// coprime p,q <= max_pq, r <= max_r.
RightTriangleSpec random_triangle_spec(TrialRng& rng, long max_d, long max_c, long max_pq,
                                       long max_r);

/// Vertices of the spec's triangle (possibly degenerate).
std::vector<RationalPoint> spec_vertices(const RightTriangleSpec& T);

} // namespace lattice
