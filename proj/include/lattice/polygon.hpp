#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "lattice/lattice_count.hpp"

namespace lattice {

struct SelfIntersecting : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegenerateArea : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TooFewVertices : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegenerateTriangle : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Simple polygon with rational vertices, stored counterclockwise with
/// consecutive collinear vertices merged.
class RationalPolygon {
public:
    /// Validates and canonicalizes; throws TooFewVertices, DegenerateArea,
    /// SelfIntersecting.
    static RationalPolygon validate(std::vector<RationalPoint> vertices);

    const std::vector<RationalPoint>& vertices() const { return vertices_; }

private:
    explicit RationalPolygon(std::vector<RationalPoint> v) : vertices_(std::move(v)) {}
    std::vector<RationalPoint> vertices_;
};

/// Exact signed shoelace area (positive for CCW input).
Rational signed_area(const std::vector<RationalPoint>& vertices);

/// Area of a validated polygon.
Rational area(const RationalPolygon& P);

using Triangle = std::array<RationalPoint, 3>;

/// n-2 positively oriented triangles tiling P: a fan for convex P, ear
/// clipping otherwise. No triangle edge passes through another vertex.
std::vector<Triangle> triangulate(const RationalPolygon& P);

struct Segment {
    RationalPoint a, b;
};

/// A right triangle piece together with its normalized counting spec. The
/// placement (right-angle corner and leg endpoints) is kept so the piece can
/// be membership-tested in original coordinates.
struct PlacedRightTriangle {
    RationalPoint corner, x_end, y_end;
    RightTriangleSpec spec;
    int sign;
};

/// Signed decomposition of a triangle: bounding rectangle (+1), complementary
/// axis-aligned right triangles and at most one rectangle (-1), plus segment
/// and point corrections so that the signed sum of closed counts equals the
/// closed count of the triangle for every dilation t >= 1.
struct Decomposition {
    std::vector<std::pair<RationalRect, int>> rectangles;
    std::vector<PlacedRightTriangle> right_triangles;
    std::vector<std::pair<Segment, int>> segments;
    std::vector<std::pair<RationalPoint, int>> points;
};

Decomposition decompose_triangle(const RationalPoint& v1, const RationalPoint& v2,
                                 const RationalPoint& v3);

/// Signed closed count of a decomposition at dilation t.
Integer count_decomposition(const Decomposition& D, const Integer& t);

/// Exact number of lattice points in the closure of t*P, via triangulation
/// and the closed-form primitives.
Integer count_closure(const RationalPolygon& P, const Integer& t);

/// Lattice points on the boundary of t*P.
Integer count_boundary(const RationalPolygon& P, const Integer& t);

/// Lattice points in the interior of t*P (closure minus boundary).
Integer count_interior(const RationalPolygon& P, const Integer& t);

/// Degree-2 Ehrhart quasipolynomial with period-pi coefficient lists.
struct QuasiPolynomial2 {
    Integer period;
    Rational c2;
    std::vector<Rational> c1, c0;

    /// L(t) = c2 t^2 + c1[t mod period] t + c0[t mod period], any integer t.
    Rational eval(const Integer& t) const;
};

/// Extracts the Ehrhart quasipolynomial by exact interpolation at three
/// points per residue class, with a fourth-point verification.
QuasiPolynomial2 ehrhart(const RationalPolygon& P);

/// Parses the polygon text format: one `<x> <y>` vertex per line, `#`
/// comments and blank lines ignored. Throws ParseError.
std::vector<RationalPoint> parse_polygon_text(std::istream& in);

} // namespace lattice
