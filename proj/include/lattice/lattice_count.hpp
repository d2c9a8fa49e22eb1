#pragma once

#include <utility>
#include <vector>

#include "lattice/dedekind.hpp"
#include "lattice/exact_core.hpp"

namespace lattice {

/// The rectangular rational triangle {x >= a/d, y >= b/d, cpx + cqy <= r}
/// in normalized form: 0 <= a,b < d, gcd(p,q) = 1, cpa + cqb <= rd.
struct RightTriangleSpec {
    Integer a, b, d, c, p, q, r;

    /// Throws InvalidSpec when the normalization invariants fail.
    void validate() const;
};

/// Axis-aligned rectangle [a1/d, b1/d] x [a2/d, b2/d].
struct RationalRect {
    Integer a1, a2, b1, b2, d;

    void validate() const;
};

struct RationalPoint {
    Rational x, y;

    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

enum class CountMode { Closure, Interior, Boundary };

enum class CountPath { ClosedFormula, Oracle, Reciprocity };

struct CountReport {
    Integer count;
    CountPath path;
};

/// The generating-function shifts u, v for the dilate t (true floor, so the
/// formula extends to negative t for reciprocity).
std::pair<Integer, Integer> uv_shift(const RightTriangleSpec& T, const Integer& t);

/// Exact closed-form count of lattice points in the closed dilate t*T.
/// Defined for every integer t; counts points only for t >= 1.
Integer count_right_triangle_closure(const RightTriangleSpec& T, const Integer& t);

/// Closed form for the origin case a=b=0, c=r=1 (value as a Rational; it is
/// an integer count for t >= 0).
Rational count_right_triangle_origin(const Integer& p, const Integer& q, const Integer& t);

/// Interior count via Ehrhart-Macdonald reciprocity: closure formula at -t.
Integer count_right_triangle_interior(const RightTriangleSpec& T, const Integer& t);

/// ([t*b1/d] - [(t*a1-1)/d]) * ([t*b2/d] - [(t*a2-1)/d]).
Integer count_rectangle(const RationalRect& R, const Integer& t);

/// Lattice points on the closed segment from t*P1 to t*P2, via extended-gcd
/// parametrization. O(log) in coordinate magnitudes.
Integer count_segment_closed(const RationalPoint& P1, const RationalPoint& P2, const Integer& t);

/// Exhaustive bounding-box enumeration with exact membership tests; ground
/// truth for every closed formula. vertices may describe a polygon, a
/// segment (2 points) or a single point.
Integer brute_force_count(const std::vector<RationalPoint>& vertices, const Integer& t,
                          CountMode mode);

// Exact geometric predicates shared with the polygon module.
Rational cross(const RationalPoint& o, const RationalPoint& a, const RationalPoint& b);
bool on_segment(const RationalPoint& a, const RationalPoint& b, const RationalPoint& p);
bool is_simple_polygon(const std::vector<RationalPoint>& vertices);

} // namespace lattice
