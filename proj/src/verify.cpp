#include "lattice/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lattice/fourier_verify.hpp"

namespace lattice {

namespace {

std::uint64_t splitmix64(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial) {
    state_ = seed ^ (0x2545f4914f6cdd1dULL * (trial + 1));
    // burn-in decorrelates nearby (seed, trial) pairs
    for (int i = 0; i < 4; ++i) splitmix64(state_);
}

std::uint64_t TrialRng::next() { return splitmix64(state_); }

long TrialRng::range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational TrialRng::rational(long num_lo, long num_hi, long den_hi) {
    return Rational(range(num_lo, num_hi), range(1, den_hi));
}

RationalPolygon random_polygon(TrialRng& rng, long max_den) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        long n = rng.range(3, 8);
        std::vector<RationalPoint> pts;
        for (long i = 0; i < n; ++i)
            pts.push_back({rng.rational(-5, 5, max_den), rng.rational(-5, 5, max_den)});
        // sort by angle around the centroid (exact half-plane + cross test)
        Rational cx(0), cy(0);
        for (const auto& p : pts) {
            cx += p.x;
            cy += p.y;
        }
        cx = cx / Rational(n);
        cy = cy / Rational(n);
        RationalPoint c{cx, cy};
        auto half = [&](const RationalPoint& p) {
            if (p.y > c.y) return 0;
            if (p.y < c.y) return 1;
            return p.x >= c.x ? 0 : 1;
        };
        std::sort(pts.begin(), pts.end(), [&](const RationalPoint& a, const RationalPoint& b) {
            int ha = half(a), hb = half(b);
            if (ha != hb) return ha < hb;
            return cross(c, a, b) > Rational(0);
        });
        try {
            return RationalPolygon::validate(pts);
        } catch (const std::invalid_argument&) {
            // degenerate draw; resample
        }
    }
    throw std::logic_error("random_polygon: could not generate a valid polygon");
}

RightTriangleSpec random_triangle_spec(TrialRng& rng, long max_d, long max_c, long max_pq,
                                       long max_r) {
    for (;;) {
        Integer d = rng.range(1, max_d);
        Integer a = rng.range(0, mpz_get_si(d.get_mpz_t()) - 1);
        Integer b = rng.range(0, mpz_get_si(d.get_mpz_t()) - 1);
        Integer c = rng.range(1, max_c);
        Integer p = rng.range(1, max_pq);
        Integer q = rng.range(1, max_pq);
        Integer r = rng.range(0, max_r);
        Integer g;
        mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
        if (g != 1) continue;
        if (c * p * a + c * q * b > r * d) continue;
        return RightTriangleSpec{a, b, d, c, p, q, r};
    }
}

std::vector<RationalPoint> spec_vertices(const RightTriangleSpec& T) {
    Rational x0(T.a, T.d), y0(T.b, T.d);
    Rational x1 = (Rational(T.r) - Rational(T.c * T.q) * y0) / Rational(T.c * T.p);
    Rational y1 = (Rational(T.r) - Rational(T.c * T.p) * x0) / Rational(T.c * T.q);
    return {{x0, y0}, {x1, y0}, {x0, y1}};
}

namespace {

struct TrialOutcome {
    bool ok = true;
    std::string detail;
    double deviation = 0;
};

std::string fmt(const Rational& r) { return r.str(); }

long coprime_pair(TrialRng& rng, long max_size, long& other) {
    for (;;) {
        long a = rng.range(1, max_size);
        long b = rng.range(1, max_size);
        Integer g;
        Integer ia(a), ib(b);
        mpz_gcd(g.get_mpz_t(), ia.get_mpz_t(), ib.get_mpz_t());
        if (g == 1) {
            other = b;
            return a;
        }
    }
}

TrialOutcome trial_dedekind(TrialRng& rng, long max_size) {
    long b;
    long a = coprime_pair(rng, max_size, b);
    Rational lhs = sigma_fast(a, b, Rational(0)) + sigma_fast(b, a, Rational(0));
    Rational rhs = dedekind_reciprocity_rhs(a, b) + Rational(1, 2);
    TrialOutcome out;
    if (lhs != rhs) {
        out.ok = false;
        out.detail = "a=" + std::to_string(a) + " b=" + std::to_string(b) + " lhs=" + fmt(lhs) +
                     " rhs=" + fmt(rhs);
        return out;
    }
    if (a <= 400 && b <= 400) {
        Rational sl = Rational(b) * rademacher_S(a, b, Rational(0), Rational(0)) +
                      Rational(a) * rademacher_S(b, a, Rational(0), Rational(0));
        if (sl != dedekind_reciprocity_rhs(a, b)) {
            out.ok = false;
            out.detail = "S-form a=" + std::to_string(a) + " b=" + std::to_string(b);
        }
    }
    return out;
}

TrialOutcome trial_rademacher(TrialRng& rng, long max_size) {
    long cap = std::min(max_size, 400L);
    long b;
    long a = coprime_pair(rng, cap, b);
    Rational x = rng.rational(-4, 4, 6);
    Rational y = rng.rational(-4, 4, 6);
    Rational lhs = Rational(Integer(b)) * rademacher_S(a, b, x, y) +
                   Rational(Integer(a)) * rademacher_S(b, a, y, x);
    Rational rhs = rademacher_reciprocity_rhs(a, b, x, y);
    TrialOutcome out;
    if (lhs != rhs) {
        out.ok = false;
        out.detail = "a=" + std::to_string(a) + " b=" + std::to_string(b) + " x=" + fmt(x) +
                     " y=" + fmt(y) + " lhs=" + fmt(lhs) + " rhs=" + fmt(rhs);
    }
    return out;
}

TrialOutcome trial_unified(TrialRng& rng, long max_size) {
    long q;
    long p = coprime_pair(rng, max_size, q);
    // rational t in [1, p+q]
    long den = rng.range(1, 12);
    long span = std::min(p + q - 1, 1000000L);
    Rational t = Rational(1) + Rational(rng.range(0, span - 1 >= 0 ? span : 0)) +
                 Rational(rng.range(0, den - 1), den);
    if (t > Rational(Integer(p) + Integer(q))) t = Rational(Integer(p) + Integer(q));
    Rational lhs = sigma_fast(q, p, -t) + sigma_fast(p, q, -t);
    Rational rhs = unified_reciprocity_rhs(p, q, t);
    TrialOutcome out;
    if (lhs != rhs) {
        out.ok = false;
        out.detail = "p=" + std::to_string(p) + " q=" + std::to_string(q) + " t=" + fmt(t);
        return out;
    }
    if (p <= 200 && q <= 200) {
        Rational nl = sigma_naive(q, p, -t) + sigma_naive(p, q, -t);
        if (nl != rhs) {
            out.ok = false;
            out.detail = "naive p=" + std::to_string(p) + " q=" + std::to_string(q) +
                         " t=" + fmt(t);
        }
    }
    return out;
}

TrialOutcome trial_gessel(TrialRng& rng, long max_size) {
    long q;
    long p = coprime_pair(rng, max_size, q);
    long span = std::min(p + q, 1000000L);
    Integer t = rng.range(1, span);
    Rational lhs = sigma_fast(q, p, Rational(-t)) + sigma_fast(p, q, Rational(-t));
    Rational rhs = gessel_sigma_rhs(p, q, t);
    TrialOutcome out;
    if (lhs != rhs) {
        out.ok = false;
        out.detail = "p=" + std::to_string(p) + " q=" + std::to_string(q) + " t=" + t.get_str();
    }
    return out;
}

TrialOutcome trial_fourier(TrialRng& rng, long max_size) {
    long cap = std::max(2L, std::min(max_size, 12L));
    long c = rng.range(1, cap);
    long qq;
    long pp = coprime_pair(rng, cap, qq);
    long t = rng.range(-2 * c * pp, 2 * c * pp);
    TrialOutcome out;
    double dev = 0;

    // identity: (1/p) sum lambda^t/(lambda-1) = ((-t/p)) + 1/(2p)
    ComplexApprox s = roots_sum_simple(pp, t);
    double closed = sawtooth(Rational(-t, pp)).to_float_approx() + 1.0 / (2.0 * pp);
    dev = std::max({dev, std::abs(s.real() - closed), std::abs(s.imag())});

    // keycor: branch on c | t
    ComplexApprox k = roots_sum_keycor(c, pp, qq, t);
    double kc = 0.0;
    if (t % c == 0) {
        Integer qinv = mod_inverse(qq, pp);
        kc = -sawtooth(Rational(-qinv * Integer(t), Integer(c) * Integer(pp))).to_float_approx() -
             1.0 / (2.0 * pp);
    }
    dev = std::max({dev, std::abs(k.real() - kc), std::abs(k.imag())});

    // -sigma(q,p,t/c) - ((t/(cp))) + ((t/c))/(2p), valid for every integer t
    ComplexApprox dsum = roots_sum_dedekind(c, pp, qq, t);
    double dclosed = (-sigma_fast(qq, pp, Rational(t, c)) - sawtooth(Rational(t, c * pp)) +
                      sawtooth(Rational(t, c)) / Rational(2 * pp))
                         .to_float_approx();
    dev = std::max({dev, std::abs(dsum.real() - dclosed), std::abs(dsum.imag())});

    // full numeric count against the exact closed formula
    RightTriangleSpec T = random_triangle_spec(rng, 4, 3, 5, 6);
    long td = rng.range(1, 8);
    double numeric = closure_count_fourier(
        mpz_get_si(T.a.get_mpz_t()), mpz_get_si(T.b.get_mpz_t()), mpz_get_si(T.d.get_mpz_t()),
        mpz_get_si(T.c.get_mpz_t()), mpz_get_si(T.p.get_mpz_t()), mpz_get_si(T.q.get_mpz_t()),
        mpz_get_si(T.r.get_mpz_t()), td);
    double exact = count_right_triangle_closure(T, Integer(td)).get_d();
    dev = std::max(dev, std::abs(numeric - exact));

    out.deviation = dev;
    if (dev > 1e-10) {
        out.ok = false;
        std::ostringstream os;
        os << "c=" << c << " p=" << pp << " q=" << qq << " t=" << t << " dev=" << dev;
        out.detail = os.str();
    }
    return out;
}

TrialOutcome trial_oracle_triangle(TrialRng& rng, long max_size) {
    long md = std::max(1L, std::min(max_size, 6L));
    RightTriangleSpec T = random_triangle_spec(rng, md, 3, 5, 6);
    Integer t = rng.range(1, 20);
    auto verts = spec_vertices(T);
    Integer closure = count_right_triangle_closure(T, t);
    Integer oracle = brute_force_count(verts, t, CountMode::Closure);
    TrialOutcome out;
    if (closure != oracle) {
        out.ok = false;
        out.detail = "closure spec=(" + T.a.get_str() + "," + T.b.get_str() + "," +
                     T.d.get_str() + "," + T.c.get_str() + "," + T.p.get_str() + "," +
                     T.q.get_str() + "," + T.r.get_str() + ") t=" + t.get_str() + " got=" +
                     closure.get_str() + " want=" + oracle.get_str();
        return out;
    }
    Integer interior = count_right_triangle_interior(T, t);
    Integer ioracle = brute_force_count(verts, t, CountMode::Interior);
    if (interior != ioracle) {
        out.ok = false;
        out.detail = "interior spec=(" + T.a.get_str() + "," + T.b.get_str() + "," +
                     T.d.get_str() + "," + T.c.get_str() + "," + T.p.get_str() + "," +
                     T.q.get_str() + "," + T.r.get_str() + ") t=" + t.get_str() + " got=" +
                     interior.get_str() + " want=" + ioracle.get_str();
    }
    return out;
}

std::string polygon_detail(const RationalPolygon& P, const Integer& t) {
    std::string s = "t=" + t.get_str() + " polygon:";
    for (const auto& v : P.vertices()) s += " (" + v.x.str() + "," + v.y.str() + ")";
    return s;
}

TrialOutcome trial_oracle_polygon(TrialRng& rng, long max_size) {
    long md = std::max(1L, std::min(max_size, 6L));
    RationalPolygon P = random_polygon(rng, md);
    Integer t = rng.range(1, 12);
    TrialOutcome out;
    const auto& verts = P.vertices();
    if (count_closure(P, t) != brute_force_count(verts, t, CountMode::Closure)) {
        out.ok = false;
        out.detail = "closure " + polygon_detail(P, t);
        return out;
    }
    if (count_boundary(P, t) != brute_force_count(verts, t, CountMode::Boundary)) {
        out.ok = false;
        out.detail = "boundary " + polygon_detail(P, t);
        return out;
    }
    if (count_interior(P, t) != brute_force_count(verts, t, CountMode::Interior)) {
        out.ok = false;
        out.detail = "interior " + polygon_detail(P, t);
    }
    return out;
}

TrialOutcome trial_ehrhart(TrialRng& rng, long max_size) {
    long md = std::max(1L, std::min(max_size, 3L));
    RationalPolygon P = random_polygon(rng, md);
    TrialOutcome out;
    QuasiPolynomial2 Q;
    try {
        Q = ehrhart(P);
    } catch (const FitMismatch& e) {
        out.ok = false;
        out.detail = std::string(e.what()) + " " + polygon_detail(P, 0);
        return out;
    }
    if (Q.c2 != area(P)) {
        out.ok = false;
        out.detail = "c2 != area " + polygon_detail(P, 0);
        return out;
    }
    Integer t = rng.range(1, 10);
    if (Rational(count_closure(P, t)) != Q.eval(t)) {
        out.ok = false;
        out.detail = "eval mismatch " + polygon_detail(P, t);
        return out;
    }
    // Ehrhart-Macdonald: quasipolynomial at -t gives the interior count
    if (Q.eval(-t) != Rational(count_interior(P, t))) {
        out.ok = false;
        out.detail = "reciprocity mismatch " + polygon_detail(P, t);
        return out;
    }
    if (Q.period == 1) {
        // lattice polygon: Euler characteristic and Pick's theorem
        if (Q.c0[0] != Rational(1)) {
            out.ok = false;
            out.detail = "constant term != 1 " + polygon_detail(P, 1);
            return out;
        }
        Rational pick = area(P) + Rational(count_boundary(P, 1)) / Rational(2) + Rational(1);
        if (Rational(count_closure(P, 1)) != pick) {
            out.ok = false;
            out.detail = "Pick mismatch " + polygon_detail(P, 1);
        }
    }
    return out;
}

} // namespace

SuiteReport run_suite(const VerifySuiteConfig& config) {
    SuiteReport report;
    report.numeric = config.suite == "fourier";
    for (long i = 0; i < config.trials; ++i) {
        TrialRng rng(config.seed, static_cast<std::uint64_t>(i));
        TrialOutcome out;
        if (config.suite == "dedekind")
            out = trial_dedekind(rng, config.max_size);
        else if (config.suite == "rademacher")
            out = trial_rademacher(rng, config.max_size);
        else if (config.suite == "unified")
            out = trial_unified(rng, config.max_size);
        else if (config.suite == "gessel")
            out = trial_gessel(rng, config.max_size);
        else if (config.suite == "fourier")
            out = trial_fourier(rng, config.max_size);
        else if (config.suite == "oracle-triangle")
            out = trial_oracle_triangle(rng, config.max_size);
        else if (config.suite == "oracle-polygon")
            out = trial_oracle_polygon(rng, config.max_size);
        else if (config.suite == "ehrhart")
            out = trial_ehrhart(rng, config.max_size);
        else
            throw std::invalid_argument("unknown suite: " + config.suite);
        report.max_deviation = std::max(report.max_deviation, out.deviation);
        if (out.ok) {
            ++report.passes;
        } else {
            if (report.fails == 0)
                report.first_failure = "trial " + std::to_string(i) + ": " + out.detail;
            ++report.fails;
        }
    }
    return report;
}

} // namespace lattice
