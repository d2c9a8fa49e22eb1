#include "lattice/lattice_count.hpp"

#include <algorithm>

namespace lattice {

void RightTriangleSpec::validate() const {
    if (d < 1 || c < 1 || p < 1 || q < 1 || r < 0)
        throw InvalidSpec("RightTriangleSpec: need d,c,p,q >= 1 and r >= 0");
    if (a < 0 || a >= d || b < 0 || b >= d)
        throw InvalidSpec("RightTriangleSpec: need 0 <= a,b < d");
    Integer g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1) throw InvalidSpec("RightTriangleSpec: p,q must be coprime");
    if (c * p * a + c * q * b > r * d)
        throw InvalidSpec("RightTriangleSpec: empty triangle (cpa + cqb > rd)");
}

void RationalRect::validate() const {
    if (d < 1) throw InvalidSpec("RationalRect: d must be >= 1");
    if (a1 >= b1 || a2 >= b2) throw InvalidSpec("RationalRect: need a1 < b1 and a2 < b2");
}

std::pair<Integer, Integer> uv_shift(const RightTriangleSpec& T, const Integer& t) {
    Integer u = (floor_div(t * T.a - 1, T.d) + 1) * T.c * T.p;
    Integer v = (floor_div(t * T.b - 1, T.d) + 1) * T.c * T.q;
    return {u, v};
}

namespace {

Integer to_integer(const Rational& x, const char* what) {
    if (!x.is_integer()) throw std::logic_error(std::string(what) + ": non-integer value");
    return x.num();
}

} // namespace

Integer count_right_triangle_closure(const RightTriangleSpec& T, const Integer& t) {
    T.validate();
    auto [u, v] = uv_shift(T, t);
    const Integer &c = T.c, &p = T.p, &q = T.q;
    Integer tr = t * T.r;
    Rational w(tr - u - v);
    Rational icp(Integer(1), c * p), icq(Integer(1), c * q);
    Rational ic2pq(Integer(1), c * c * p * q), icpq(Integer(1), c * p * q);
    Rational ipq(Integer(1), p * q);
    Rational st0 = sawtooth(Rational(tr, c));
    Rational st1 = sawtooth(Rational(tr - 1, c));

    Rational val = w * w * ic2pq / Rational(2) +
                   w * (icp / Rational(2) + icq / Rational(2) - icpq * st0) +
                   Rational(1, 4) + (Rational(p, q) + Rational(q, p)) / Rational(12) -
                   ipq / Rational(24) + ic2pq / Rational(2) +
                   icpq * st1 + ipq * st1 * st1 / Rational(2) -
                   sawtooth(Rational(tr - v) * icp) - sawtooth(Rational(tr - u) * icq) -
                   sigma_fast(q, p, Rational(tr - v, c)) -
                   sigma_fast(p, q, Rational(tr - u, c));
    return to_integer(val, "count_right_triangle_closure");
}

Rational count_right_triangle_origin(const Integer& p, const Integer& q, const Integer& t) {
    if (p < 1 || q < 1) throw InvalidModulus("p,q must be >= 1");
    Integer g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1) throw NotCoprime("p,q must be coprime");
    Rational tt(t);
    Rational ip(Integer(1), p), iq(Integer(1), q), ipq(Integer(1), p * q);
    return tt * tt * ipq / Rational(2) + tt * (ip + iq + ipq) / Rational(2) + Rational(1, 4) +
           (Rational(p, q) + Rational(q, p) + ipq) / Rational(12) -
           sigma_fast(q, p, tt) - sigma_fast(p, q, tt) -
           sawtooth(tt * ip) - sawtooth(tt * iq);
}

Integer count_right_triangle_interior(const RightTriangleSpec& T, const Integer& t) {
    T.validate();
    // Degenerate (area-zero) specs collapse to a single point, whose
    // two-dimensional interior is empty; reciprocity would instead deliver
    // the relative-interior count.
    if (T.c * T.p * T.a + T.c * T.q * T.b == T.r * T.d) return 0;
    // Ehrhart-Macdonald in dimension 2: L(T_int, t) = L(T_closure, -t).
    return count_right_triangle_closure(T, -t);
}

Integer count_rectangle(const RationalRect& R, const Integer& t) {
    R.validate();
    Integer nx = floor_div(t * R.b1, R.d) - floor_div(t * R.a1 - 1, R.d);
    Integer ny = floor_div(t * R.b2, R.d) - floor_div(t * R.a2 - 1, R.d);
    return nx * ny;
}

namespace {

Integer ceil_int(const Rational& x) { return -floor_int(-x); }

// Number of integers in [lo, hi]; 0 when empty.
Integer integers_in(const Rational& lo, const Rational& hi) {
    if (lo > hi) return 0;
    Integer n = floor_int(hi) - ceil_int(lo) + 1;
    return n > 0 ? n : Integer(0);
}

} // namespace

Integer count_segment_closed(const RationalPoint& P1, const RationalPoint& P2, const Integer& t) {
    if (P1 == P2) throw DegenerateSegment("count_segment_closed: identical endpoints");
    Rational ts(t);
    Rational ax = ts * P1.x, ay = ts * P1.y;
    Rational bx = ts * P2.x, by = ts * P2.y;
    // Line through A, B as alpha*x + beta*y = gamma with integer coefficients.
    Rational ar = by - ay, br = ax - bx;
    Rational gr = ar * ax + br * ay;
    Integer L = ar.den();
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), br.den().get_mpz_t());
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), gr.den().get_mpz_t());
    Integer alpha = (ar * Rational(L)).num();
    Integer beta = (br * Rational(L)).num();
    Integer gamma = (gr * Rational(L)).num();
    Integer g;
    mpz_gcd(g.get_mpz_t(), alpha.get_mpz_t(), beta.get_mpz_t());
    if (gamma % g != 0) return 0; // no integer points on the line
    alpha /= g;
    beta /= g;
    gamma /= g;
    auto [gg, s, uu] = extended_gcd(alpha, beta);
    // Base solution (x0, y0); general solution x = x0 + beta*n, y = y0 - alpha*n.
    Integer x0 = s * gamma, y0 = uu * gamma;
    if (beta != 0) {
        // dx != 0: a segment point is determined by its x-range.
        Rational lo = (std::min(ax, bx) - Rational(x0)) / Rational(beta);
        Rational hi = (std::max(ax, bx) - Rational(x0)) / Rational(beta);
        if (lo > hi) std::swap(lo, hi);
        return integers_in(lo, hi);
    }
    // Vertical segment: x fixed at gamma/alpha (alpha = +-1 here).
    Rational lo = (std::min(ay, by) - Rational(y0)) / Rational(-alpha);
    Rational hi = (std::max(ay, by) - Rational(y0)) / Rational(-alpha);
    if (lo > hi) std::swap(lo, hi);
    return integers_in(lo, hi);
}

Rational cross(const RationalPoint& o, const RationalPoint& a, const RationalPoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(const RationalPoint& a, const RationalPoint& b, const RationalPoint& p) {
    if (!cross(a, b, p).is_zero()) return false;
    Rational dot = (p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y);
    Rational len2 = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
    return dot >= Rational(0) && dot <= len2;
}

namespace {

bool segments_intersect_improperly(const RationalPoint& a, const RationalPoint& b,
                                   const RationalPoint& c, const RationalPoint& d,
                                   bool adjacent) {
    Rational d1 = cross(c, d, a), d2 = cross(c, d, b);
    Rational d3 = cross(a, b, c), d4 = cross(a, b, d);
    int s1 = d1.sign(), s2 = d2.sign(), s3 = d3.sign(), s4 = d4.sign();
    if (!adjacent) {
        if (((s1 > 0 && s2 < 0) || (s1 < 0 && s2 > 0)) &&
            ((s3 > 0 && s4 < 0) || (s3 < 0 && s4 > 0)))
            return true;
        if (s1 == 0 && on_segment(c, d, a)) return true;
        if (s2 == 0 && on_segment(c, d, b)) return true;
        if (s3 == 0 && on_segment(a, b, c)) return true;
        if (s4 == 0 && on_segment(a, b, d)) return true;
        return false;
    }
    // Adjacent edges share exactly one endpoint; any collinear overlap beyond
    // the shared point is an intersection.
    if (s1 == 0 && s2 == 0 && s3 == 0 && s4 == 0) {
        // collinear adjacent edges: overlap iff they point the same way
        int count = 0;
        if (on_segment(c, d, a)) ++count;
        if (on_segment(c, d, b)) ++count;
        if (on_segment(a, b, c)) ++count;
        if (on_segment(a, b, d)) ++count;
        return count > 2;
    }
    return false;
}

} // namespace

bool is_simple_polygon(const std::vector<RationalPoint>& v) {
    size_t n = v.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            if (v[i] == v[j]) return false;
        }
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            const RationalPoint &a = v[i], &b = v[(i + 1) % n];
            const RationalPoint &c = v[j], &d = v[(j + 1) % n];
            if (adjacent) {
                if (segments_intersect_improperly(a, b, c, d, true)) return false;
            } else {
                if (segments_intersect_improperly(a, b, c, d, false)) return false;
            }
        }
    }
    return true;
}

namespace {

bool point_on_boundary(const std::vector<RationalPoint>& poly, const RationalPoint& p) {
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i)
        if (on_segment(poly[i], poly[(i + 1) % n], p)) return true;
    return false;
}

// Crossing-number test; p must not be on the boundary.
bool point_strictly_inside(const std::vector<RationalPoint>& poly, const RationalPoint& p) {
    size_t n = poly.size();
    bool inside = false;
    for (size_t i = 0; i < n; ++i) {
        const RationalPoint& a = poly[i];
        const RationalPoint& b = poly[(i + 1) % n];
        bool a_above = a.y > p.y, b_above = b.y > p.y;
        if (a_above == b_above) continue;
        // x-coordinate where edge crosses the horizontal through p
        Rational xc = a.x + (b.x - a.x) * (p.y - a.y) / (b.y - a.y);
        if (xc > p.x) inside = !inside;
    }
    return inside;
}

bool all_collinear(const std::vector<RationalPoint>& v) {
    for (size_t i = 2; i < v.size(); ++i)
        if (!cross(v[0], v[1], v[i]).is_zero()) return false;
    return true;
}

} // namespace

Integer brute_force_count(const std::vector<RationalPoint>& vertices, const Integer& t,
                          CountMode mode) {
    if (vertices.empty()) throw InvalidPolygon("brute_force_count: no vertices");
    std::vector<RationalPoint> sv;
    sv.reserve(vertices.size());
    Rational ts(t);
    for (const auto& p : vertices) sv.push_back({ts * p.x, ts * p.y});

    // Degenerate cases: single point or collinear vertex set.
    bool degenerate = sv.size() < 3 || all_collinear(sv);

    Rational xmin = sv[0].x, xmax = sv[0].x, ymin = sv[0].y, ymax = sv[0].y;
    for (const auto& p : sv) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }

    if (!degenerate && !is_simple_polygon(vertices))
        throw InvalidPolygon("brute_force_count: self-intersecting polygon");

    Integer count = 0;
    for (Integer x = ceil_int(xmin); x <= floor_int(xmax); ++x) {
        for (Integer y = ceil_int(ymin); y <= floor_int(ymax); ++y) {
            RationalPoint p{Rational(x), Rational(y)};
            bool counted = false;
            if (degenerate) {
                if (mode == CountMode::Interior) continue;
                if (sv.size() == 1 || (xmin == xmax && ymin == ymax)) {
                    counted = (p.x == sv[0].x && p.y == sv[0].y);
                } else {
                    // extreme points of the collinear set
                    RationalPoint lo = sv[0], hi = sv[0];
                    for (const auto& q : sv) {
                        if (q.x < lo.x || (q.x == lo.x && q.y < lo.y)) lo = q;
                        if (q.x > hi.x || (q.x == hi.x && q.y > hi.y)) hi = q;
                    }
                    counted = on_segment(lo, hi, p);
                }
            } else {
                bool bdry = point_on_boundary(sv, p);
                switch (mode) {
                    case CountMode::Closure:
                        counted = bdry || point_strictly_inside(sv, p);
                        break;
                    case CountMode::Interior:
                        counted = !bdry && point_strictly_inside(sv, p);
                        break;
                    case CountMode::Boundary:
                        counted = bdry;
                        break;
                }
            }
            if (counted) ++count;
        }
    }
    return count;
}

} // namespace lattice
