#include "lattice/polygon.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

namespace lattice {

Rational signed_area(const std::vector<RationalPoint>& v) {
    Rational s(0);
    size_t n = v.size();
    for (size_t i = 0; i < n; ++i) {
        const RationalPoint& a = v[i];
        const RationalPoint& b = v[(i + 1) % n];
        s += a.x * b.y - b.x * a.y;
    }
    return s / Rational(2);
}

Rational area(const RationalPolygon& P) { return signed_area(P.vertices()); }

RationalPolygon RationalPolygon::validate(std::vector<RationalPoint> v) {
    if (v.size() < 3) throw TooFewVertices("polygon needs at least 3 vertices");
    // Merge consecutive duplicates and collinear runs.
    std::vector<RationalPoint> w;
    for (const auto& p : v)
        if (w.empty() || !(p == w.back())) w.push_back(p);
    while (w.size() > 1 && w.front() == w.back()) w.pop_back();
    bool changed = true;
    while (changed && w.size() >= 3) {
        changed = false;
        for (size_t i = 0; i < w.size(); ++i) {
            const RationalPoint& a = w[(i + w.size() - 1) % w.size()];
            const RationalPoint& c = w[(i + 1) % w.size()];
            if (cross(a, w[i], c).is_zero()) {
                w.erase(w.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }
    if (w.size() < 3) throw DegenerateArea("polygon degenerates to a segment or point");
    Rational a2 = signed_area(w);
    if (a2.is_zero()) throw DegenerateArea("polygon has zero area");
    if (a2 < Rational(0)) std::reverse(w.begin(), w.end());
    if (!is_simple_polygon(w)) throw SelfIntersecting("polygon boundary self-intersects");
    return RationalPolygon(std::move(w));
}

namespace {

// Point in closed convex polygon, orientation-agnostic.
bool in_convex(const std::vector<RationalPoint>& poly, const RationalPoint& p) {
    size_t n = poly.size();
    bool pos = false, neg = false;
    for (size_t i = 0; i < n; ++i) {
        int s = cross(poly[i], poly[(i + 1) % n], p).sign();
        if (s > 0) pos = true;
        if (s < 0) neg = true;
    }
    return !(pos && neg);
}

bool in_closed_triangle(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c,
                        const RationalPoint& p) {
    return in_convex({a, b, c}, p);
}

} // namespace

std::vector<Triangle> triangulate(const RationalPolygon& P) {
    std::vector<RationalPoint> w = P.vertices();
    size_t n = w.size();
    bool convex = true;
    for (size_t i = 0; i < n && convex; ++i)
        if (cross(w[i], w[(i + 1) % n], w[(i + 2) % n]).sign() < 0) convex = false;

    std::vector<Triangle> tris;
    if (convex) {
        for (size_t i = 1; i + 1 < n; ++i) tris.push_back({w[0], w[i], w[i + 1]});
        return tris;
    }
    // Ear clipping. An ear is rejected if any other vertex lies in its closed
    // triangle, so no diagonal ever passes through a vertex.
    while (w.size() > 3) {
        size_t m = w.size();
        bool clipped = false;
        for (size_t i = 0; i < m; ++i) {
            const RationalPoint& a = w[(i + m - 1) % m];
            const RationalPoint& b = w[i];
            const RationalPoint& c = w[(i + 1) % m];
            if (cross(a, b, c).sign() <= 0) continue;
            bool blocked = false;
            for (size_t j = 0; j < m && !blocked; ++j) {
                if (j == i || j == (i + m - 1) % m || j == (i + 1) % m) continue;
                if (in_closed_triangle(a, b, c, w[j])) blocked = true;
            }
            if (blocked) continue;
            tris.push_back({a, b, c});
            w.erase(w.begin() + static_cast<long>(i));
            clipped = true;
            break;
        }
        if (!clipped) throw InvalidPolygon("triangulate: no ear found");
    }
    tris.push_back({w[0], w[1], w[2]});
    return tris;
}

namespace {

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

RationalRect make_rect(const Rational& x0, const Rational& x1, const Rational& y0,
                       const Rational& y1) {
    Integer d = lcm(lcm(x0.den(), x1.den()), lcm(y0.den(), y1.den()));
    return RationalRect{(x0 * Rational(d)).num(), (y0 * Rational(d)).num(),
                        (x1 * Rational(d)).num(), (y1 * Rational(d)).num(), d};
}

// Normalizes the axis-aligned right triangle with right angle at C, horizontal
// leg ending at P and vertical leg ending at Q into counting form by axis
// flips and integer translation.
RightTriangleSpec normalize_right_triangle(const RationalPoint& C, const RationalPoint& P,
                                           const RationalPoint& Q) {
    Rational lx = P.x - C.x, ly = Q.y - C.y;
    int sx = lx.sign() > 0 ? 1 : -1;
    int sy = ly.sign() > 0 ? 1 : -1;
    Rational cx = sx > 0 ? C.x : -C.x;
    Rational cy = sy > 0 ? C.y : -C.y;
    Rational x0 = frac(cx), y0 = frac(cy);
    Rational Lx = sx > 0 ? lx : -lx, Ly = sy > 0 ? ly : -ly;
    // hypotenuse: Ly*x + Lx*y <= Lx*Ly + Ly*x0 + Lx*y0
    Rational rhs = Lx * Ly + Ly * x0 + Lx * y0;
    Integer D = lcm(lcm(Ly.den(), Lx.den()), rhs.den());
    Integer e = (Ly * Rational(D)).num();
    Integer f = (Lx * Rational(D)).num();
    Integer r = (rhs * Rational(D)).num();
    Integer c;
    mpz_gcd(c.get_mpz_t(), e.get_mpz_t(), f.get_mpz_t());
    Integer d = lcm(x0.den(), y0.den());
    RightTriangleSpec spec{(x0 * Rational(d)).num(), (y0 * Rational(d)).num(), d,
                           c, e / c, f / c, r};
    spec.validate();
    return spec;
}

struct PieceSet {
    std::vector<std::vector<RationalPoint>> polys; // 2-D pieces
    std::vector<int> signs;
};

std::string point_key(const RationalPoint& p) { return p.x.str() + "," + p.y.str(); }

bool point_less(const RationalPoint& a, const RationalPoint& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

} // namespace

Decomposition decompose_triangle(const RationalPoint& v1, const RationalPoint& v2,
                                 const RationalPoint& v3) {
    if (cross(v1, v2, v3).is_zero()) throw DegenerateTriangle("decompose_triangle: zero area");
    std::vector<RationalPoint> T{v1, v2, v3};
    if (signed_area(T) < Rational(0)) std::swap(T[1], T[2]);

    Rational X0 = T[0].x, X1 = T[0].x, Y0 = T[0].y, Y1 = T[0].y;
    for (const auto& p : T) {
        X0 = std::min(X0, p.x);
        X1 = std::max(X1, p.x);
        Y0 = std::min(Y0, p.y);
        Y1 = std::max(Y1, p.y);
    }

    Decomposition D;
    PieceSet pieces;
    std::vector<RationalPoint> box{{X0, Y0}, {X1, Y0}, {X1, Y1}, {X0, Y1}};
    D.rectangles.emplace_back(make_rect(X0, X1, Y0, Y1), +1);
    pieces.polys.push_back(box);
    pieces.signs.push_back(+1);

    // One axis-aligned right triangle per slanted edge, on the far side of
    // the edge from the opposite vertex.
    for (int i = 0; i < 3; ++i) {
        const RationalPoint& A = T[static_cast<size_t>(i)];
        const RationalPoint& B = T[static_cast<size_t>((i + 1) % 3)];
        const RationalPoint& W = T[static_cast<size_t>((i + 2) % 3)];
        if (A.x == B.x || A.y == B.y) continue;
        RationalPoint c1{A.x, B.y}, c2{B.x, A.y};
        int sw = cross(A, B, W).sign();
        RationalPoint corner = (cross(A, B, c1).sign() == -sw) ? c1 : c2;
        RationalPoint x_end = (corner.y == A.y) ? A : B; // horizontal-leg mate
        RationalPoint y_end = (corner.x == A.x) ? A : B;
        D.right_triangles.push_back(
            {corner, x_end, y_end, normalize_right_triangle(corner, x_end, y_end), -1});
        pieces.polys.push_back({A, B, corner});
        pieces.signs.push_back(-1);
    }

    // When a vertex is strictly inside the box, the other two are opposite
    // box corners and a rectangle fills the remaining gap.
    for (int i = 0; i < 3; ++i) {
        const RationalPoint& C = T[static_cast<size_t>(i)];
        if (C.x > X0 && C.x < X1 && C.y > Y0 && C.y < Y1) {
            const RationalPoint& A = T[static_cast<size_t>((i + 1) % 3)];
            const RationalPoint& B = T[static_cast<size_t>((i + 2) % 3)];
            int side = cross(A, B, C).sign();
            for (const auto& K : box) {
                if (K == A || K == B) continue;
                if (cross(A, B, K).sign() != side) continue;
                Rational rx0 = std::min(C.x, K.x), rx1 = std::max(C.x, K.x);
                Rational ry0 = std::min(C.y, K.y), ry1 = std::max(C.y, K.y);
                D.rectangles.emplace_back(make_rect(rx0, rx1, ry0, ry1), -1);
                pieces.polys.push_back({{rx0, ry0}, {rx1, ry0}, {rx1, ry1}, {rx0, ry1}});
                pieces.signs.push_back(-1);
            }
            break;
        }
    }

    // The 2-D pieces must tile the box around the triangle exactly.
    Rational covered = cross(T[0], T[1], T[2]) / Rational(2);
    for (size_t k = 1; k < pieces.polys.size(); ++k) {
        Rational pa = signed_area(pieces.polys[k]);
        covered += pa < Rational(0) ? -pa : pa;
    }
    if (covered != (X1 - X0) * (Y1 - Y0))
        throw std::logic_error("decompose_triangle: pieces do not tile the bounding box");

    // Boundary corrections. The 2-D pieces tile the box, so the signed sum
    // already matches the triangle indicator away from piece edges; compute
    // the residual error on each arrangement subsegment and vertex and cancel
    // it with signed segments and points.
    auto signed_membership = [&](const RationalPoint& p) {
        int s = 0;
        for (size_t k = 0; k < pieces.polys.size(); ++k)
            if (in_convex(pieces.polys[k], p)) s += pieces.signs[k];
        return s;
    };
    auto target = [&](const RationalPoint& p) { return in_convex(T, p) ? 1 : 0; };

    std::vector<RationalPoint> verts;
    std::map<std::string, RationalPoint> seen;
    auto all_polys = pieces.polys;
    all_polys.push_back(T);
    for (const auto& poly : all_polys)
        for (const auto& p : poly)
            if (seen.emplace(point_key(p), p).second) verts.push_back(p);

    std::map<std::string, Segment> subsegs;
    for (const auto& poly : all_polys) {
        size_t n = poly.size();
        for (size_t i = 0; i < n; ++i) {
            const RationalPoint& a = poly[i];
            const RationalPoint& b = poly[(i + 1) % n];
            std::vector<RationalPoint> pts;
            for (const auto& v : verts)
                if (on_segment(a, b, v)) pts.push_back(v);
            std::sort(pts.begin(), pts.end(), point_less);
            for (size_t k = 0; k + 1 < pts.size(); ++k) {
                RationalPoint lo = pts[k], hi = pts[k + 1];
                subsegs.emplace(point_key(lo) + "|" + point_key(hi), Segment{lo, hi});
            }
        }
    }

    for (const auto& [key, seg] : subsegs) {
        RationalPoint mid{(seg.a.x + seg.b.x) / Rational(2), (seg.a.y + seg.b.y) / Rational(2)};
        int err = signed_membership(mid) - target(mid);
        if (err != 0) D.segments.emplace_back(seg, -err);
    }

    for (const auto& v : verts) {
        int err = signed_membership(v) - target(v);
        for (const auto& [seg, sign] : D.segments)
            if (on_segment(seg.a, seg.b, v)) err += sign;
        if (err != 0) D.points.emplace_back(v, -err);
    }
    return D;
}

Integer count_decomposition(const Decomposition& D, const Integer& t) {
    Integer total = 0;
    for (const auto& [rect, sign] : D.rectangles) total += sign * count_rectangle(rect, t);
    for (const auto& rt : D.right_triangles)
        total += rt.sign * count_right_triangle_closure(rt.spec, t);
    for (const auto& [seg, sign] : D.segments)
        total += sign * count_segment_closed(seg.a, seg.b, t);
    Rational ts(t);
    for (const auto& [pt, sign] : D.points)
        if ((ts * pt.x).is_integer() && (ts * pt.y).is_integer()) total += sign;
    return total;
}

namespace {

void require_positive_dilation(const Integer& t) {
    if (t < 1) throw OutOfRange("dilation factor t must be >= 1");
}

std::string edge_key(const RationalPoint& a, const RationalPoint& b) {
    if (point_less(a, b)) return point_key(a) + "|" + point_key(b);
    return point_key(b) + "|" + point_key(a);
}

} // namespace

Integer count_closure(const RationalPolygon& P, const Integer& t) {
    require_positive_dilation(t);
    auto tris = triangulate(P);
    Integer total = 0;
    std::map<std::string, std::pair<Segment, int>> edges;
    for (const auto& tri : tris) {
        total += count_decomposition(decompose_triangle(tri[0], tri[1], tri[2]), t);
        for (int i = 0; i < 3; ++i) {
            const RationalPoint& a = tri[static_cast<size_t>(i)];
            const RationalPoint& b = tri[static_cast<size_t>((i + 1) % 3)];
            auto [it, fresh] = edges.emplace(edge_key(a, b), std::pair<Segment, int>{{a, b}, 0});
            it->second.second += 1;
        }
    }
    // Shared diagonals are counted by both adjacent triangles; no interior
    // triangulation vertices exist, so the vertex correction is zero.
    for (const auto& [key, e] : edges)
        if (e.second == 2) total -= count_segment_closed(e.first.a, e.first.b, t);
    return total;
}

Integer count_boundary(const RationalPolygon& P, const Integer& t) {
    require_positive_dilation(t);
    const auto& v = P.vertices();
    size_t n = v.size();
    Integer total = 0;
    Rational ts(t);
    for (size_t i = 0; i < n; ++i) {
        total += count_segment_closed(v[i], v[(i + 1) % n], t);
        // each lattice vertex is counted by exactly two closed edges
        if ((ts * v[i].x).is_integer() && (ts * v[i].y).is_integer()) total -= 1;
    }
    return total;
}

Integer count_interior(const RationalPolygon& P, const Integer& t) {
    return count_closure(P, t) - count_boundary(P, t);
}

Rational QuasiPolynomial2::eval(const Integer& t) const {
    Integer idx;
    mpz_fdiv_r(idx.get_mpz_t(), t.get_mpz_t(), period.get_mpz_t());
    size_t i = static_cast<size_t>(idx.get_ui());
    Rational tt(t);
    return c2 * tt * tt + c1[i] * tt + c0[i];
}

QuasiPolynomial2 ehrhart(const RationalPolygon& P) {
    Integer period = 1;
    for (const auto& v : P.vertices()) {
        period = lcm(period, v.x.den());
        period = lcm(period, v.y.den());
    }
    Rational A = area(P);
    QuasiPolynomial2 Q{period, A, {}, {}};
    for (Integer rho = 0; rho < period; ++rho) {
        Integer t1 = (rho == 0) ? period : rho;
        Integer t2 = t1 + period, t3 = t2 + period, t4 = t3 + period;
        Rational y1(count_closure(P, t1)), y2(count_closure(P, t2)), y3(count_closure(P, t3));
        Rational r1(t1), r2(t2), r3(t3);
        Rational d12 = (y1 - y2) / (r1 - r2);
        Rational d23 = (y2 - y3) / (r2 - r3);
        Rational a = (d12 - d23) / (r1 - r3);
        Rational b = d12 - a * (r1 + r2);
        Rational c = y1 - a * r1 * r1 - b * r1;
        if (a != A)
            throw FitMismatch("ehrhart: leading coefficient differs from area");
        if (a * Rational(t4) * Rational(t4) + b * Rational(t4) + c !=
            Rational(count_closure(P, t4)))
            throw FitMismatch("ehrhart: fourth-point verification failed");
        Q.c1.push_back(b);
        Q.c0.push_back(c);
    }
    return Q;
}

std::vector<RationalPoint> parse_polygon_text(std::istream& in) {
    std::vector<RationalPoint> pts;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string xs, ys, extra;
        if (!(ls >> xs)) continue; // blank line
        if (!(ls >> ys) || (ls >> extra))
            throw ParseError("polygon line must be '<x> <y>': '" + line + "'");
        pts.push_back({Rational::parse(xs), Rational::parse(ys)});
    }
    return pts;
}

} // namespace lattice
