#include "eqlines/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "eqlines/qmatrix.hpp"
#include "eqlines/realsolve.hpp"

namespace eqlines {

namespace {

Rational rationalize(long double v, int bits) {
    long double scale = std::ldexp(1.0L, bits);
    long long num = llroundl(v * scale);
    if (num < 1) num = 1;
    BigInt den = 1;
    den <<= bits;
    return Rational(BigInt(static_cast<long>(num)), den);
}

struct QBracket {
    Rational lo, hi;
};

QBracket collatz_wielandt(const Graph& c, const std::vector<Rational>& v) {
    int n = c.order();
    QBracket b;
    bool first = true;
    for (int i = 0; i < n; ++i) {
        Rational num = 0;
        for_each_bit(c.neighbors(i), [&](int j) { num += v[j]; });
        Rational r = num / v[i];
        if (first || r < b.lo) b.lo = r;
        if (first || r > b.hi) b.hi = r;
        first = false;
    }
    return b;
}

// Certified bracket of the largest real root of p, width <= tol.
QBracket sturm_largest_root(const IntPoly& p, const Rational& tol) {
    IntPoly sf = squarefree_part(p);
    auto chain = sturm_chain(sf);
    Rational hi = sf.root_bound();  // strict Cauchy bound
    Rational lo = -hi;
    if (count_roots(chain, lo, hi) == 0)
        throw std::logic_error("sturm_largest_root: no real roots");
    while (hi - lo > tol) {
        // Split points den-th of the way across; some candidate is not a
        // root since sf has finitely many.
        Rational mid;
        bool found = false;
        for (long den = 2; den < 2 * sf.degree() + 5 && !found; ++den) {
            mid = lo + (hi - lo) / den;
            if (sf.sign_at(mid) != 0) found = true;
        }
        if (!found) throw std::logic_error("sturm_largest_root: no split point");
        if (count_roots(chain, mid, hi) >= 1)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

QBracket component_bracket(const Graph& c, const Rational& tol) {
    int n = c.order();
    std::vector<double> pv = perron_vector(c);
    std::vector<long double> vld(pv.begin(), pv.end());
    for (int attempt = 0; attempt < 3; ++attempt) {
        int bits = attempt == 0 ? 48 : 62;
        std::vector<Rational> vq(n);
        for (int i = 0; i < n; ++i) vq[i] = rationalize(vld[i], bits);
        QBracket b = collatz_wielandt(c, vq);
        if (b.hi - b.lo <= tol) return b;
        vld = rayleigh_refine(c, vld, 2 + attempt);
    }
    return sturm_largest_root(char_poly(c), tol);
}

}  // namespace

SpectralBracket spectral_radius(const Graph& g, const Rational& tol) {
    if (g.order() == 0)
        throw std::invalid_argument("spectral_radius: empty graph");
    SpectralBracket out{Rational(0), Rational(0)};
    for (uint64_t mask : g.components()) {
        if (std::popcount(mask) == 1) continue;  // isolated vertex: 0
        Graph c = g.induced(mask);
        QBracket b = component_bracket(c, tol);
        if (b.lo > out.lo) out.lo = b.lo;
        if (b.hi > out.hi) out.hi = b.hi;
    }
    if (out.lo > out.hi) out.lo = out.hi;
    return out;
}

AlgebraicReal spectral_radius_exact(const Graph& g) {
    if (g.order() == 0)
        throw std::invalid_argument("spectral_radius_exact: empty graph");
    if (g.edge_count() == 0) return AlgebraicReal::from_int(0);
    IntPoly p = char_poly(g);
    IntPoly sf = squarefree_part(p);
    auto chain = sturm_chain(sf);
    QBracket b = sturm_largest_root(p, Rational(1, 1024));
    while (count_roots(chain, b.lo, b.hi) != 1) {
        QBracket nb = sturm_largest_root(p, (b.hi - b.lo) / 16);
        b = nb;
    }
    return AlgebraicReal(p, b.lo, b.hi);
}

const char* to_string(Trichotomy t) {
    switch (t) {
        case Trichotomy::Less: return "LESS";
        case Trichotomy::Equal: return "EQUAL";
        case Trichotomy::Greater: return "GREATER";
    }
    return "?";
}

Trichotomy compare_radius(const Graph& g, const Rational& lam) {
    if (g.edge_count() == 0) {
        int c = cmp(Rational(0), lam);
        return c < 0 ? Trichotomy::Less : (c > 0 ? Trichotomy::Greater : Trichotomy::Equal);
    }
    // Fast path: certified bracket vs the rational.
    SpectralBracket b = spectral_radius(g, Rational(1, BigInt(1) << 40));
    if (b.hi < lam) return Trichotomy::Less;
    if (b.lo > lam) return Trichotomy::Greater;
    // Exact path; lambda1 is the largest root of the characteristic polynomial.
    IntPoly sf = squarefree_part(char_poly(g));
    Rational bound = sf.root_bound();
    if (lam >= bound) return Trichotomy::Less;
    if (sf.sign_at(lam) != 0)
        return count_roots(sf, lam, bound) >= 1 ? Trichotomy::Greater : Trichotomy::Less;
    // lam is an eigenvalue; deflate the simple root and look above it.
    std::vector<BigInt> lin{-lam.get_num(), lam.get_den()};
    IntPoly quot;
    if (!divides(sf, IntPoly{std::move(lin)}, &quot))
        throw std::logic_error("compare_radius: deflation failed");
    if (quot.degree() >= 1 && quot.sign_at(lam) == 0)
        throw std::logic_error("compare_radius: root not simple after squarefree");
    if (quot.degree() >= 1 && count_roots(quot, lam, bound) >= 1)
        return Trichotomy::Greater;
    return Trichotomy::Equal;
}

Trichotomy compare_radius(const Graph& g, const AlgebraicReal& lam) {
    if (lam.is_rational()) return compare_radius(g, lam.rational_value());
    if (g.edge_count() == 0) {
        int c = -lam.compare(Rational(0));
        return c < 0 ? Trichotomy::Less : (c > 0 ? Trichotomy::Greater : Trichotomy::Equal);
    }
    SpectralBracket b = spectral_radius(g, Rational(1, BigInt(1) << 40));
    lam.refine_to(Rational(1, BigInt(1) << 42));
    if (b.hi < lam.lo()) return Trichotomy::Less;
    if (b.lo > lam.hi()) return Trichotomy::Greater;
    AlgebraicReal l1 = spectral_radius_exact(g);
    int c = l1.compare(lam);
    return c < 0 ? Trichotomy::Less : (c > 0 ? Trichotomy::Greater : Trichotomy::Equal);
}

int eigen_multiplicity(const Graph& g, const AlgebraicReal& lam) {
    IntPoly p = char_poly(g);
    int mult = 0;
    IntPoly cur = p.primitive();
    while (cur.degree() >= 1 && lam.is_root_of(cur)) {
        ++mult;
        cur = poly_gcd(cur, cur.derivative());
    }
    return mult;
}

Graph subdivide_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("subdivide_edge: not an edge");
    if (g.order() >= kMaxVertices)
        throw std::invalid_argument("subdivide_edge: vertex cap reached");
    Graph out(g.order() + 1);
    for (int a = 0; a < g.order(); ++a)
        for_each_bit(g.neighbors(a), [&](int b) {
            if (a < b && !(a == std::min(u, v) && b == std::max(u, v)))
                out.add_edge(a, b);
        });
    out.add_edge(u, g.order());
    out.add_edge(v, g.order());
    return out;
}

bool is_end_path_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("is_end_path_edge: not an edge");
    for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
        // Walk from a away from b along degree-2 vertices.
        int prev = b, cur = a;
        bool ok = false;
        for (int steps = 0; steps <= g.order(); ++steps) {
            int d = g.degree(cur);
            if (d == 1) { ok = true; break; }
            if (d != 2) break;
            uint64_t nb = g.neighbors(cur) & ~(uint64_t{1} << prev);
            int next = std::countr_zero(nb);
            prev = cur;
            cur = next;
        }
        if (ok) return true;
    }
    return false;
}

Graph append_path(const Graph& g, int v, int n) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("append_path: bad vertex");
    if (g.order() + n > kMaxVertices)
        throw std::invalid_argument("append_path: vertex cap exceeded");
    Graph out(g.order() + n);
    for (int a = 0; a < g.order(); ++a)
        for_each_bit(g.neighbors(a), [&](int b) {
            if (a < b) out.add_edge(a, b);
        });
    int prev = v;
    for (int i = 0; i < n; ++i) {
        out.add_edge(prev, g.order() + i);
        prev = g.order() + i;
    }
    return out;
}

Graph join_by_path(const Graph& g1, int v1, int n, const Graph& g2, int v2) {
    int n1 = g1.order(), n2 = g2.order();
    if (n1 + n2 + n > kMaxVertices)
        throw std::invalid_argument("join_by_path: vertex cap exceeded");
    Graph out(n1 + n + n2);
    for (int a = 0; a < n1; ++a)
        for_each_bit(g1.neighbors(a), [&](int b) {
            if (a < b) out.add_edge(a, b);
        });
    for (int a = 0; a < n2; ++a)
        for_each_bit(g2.neighbors(a), [&](int b) {
            if (a < b) out.add_edge(n1 + n + a, n1 + n + b);
        });
    int prev = v1;
    for (int i = 0; i < n; ++i) {
        out.add_edge(prev, n1 + i);
        prev = n1 + i;
    }
    out.add_edge(prev, n1 + n + v2);
    return out;
}

double hoffman_limit(const Graph& base, int v) {
    if (v < 0 || v >= base.order())
        throw std::invalid_argument("hoffman_limit: bad vertex");
    // Hypothesis: lambda1(base, v, n) > 2 for some n. Probe with certified
    // lower bounds; the sequence increases in n.
    bool exceeded = false;
    int cap = std::min(40, kMaxVertices - base.order());
    for (int n = 1; n <= cap; ++n) {
        Graph probe = append_path(base, v, n);
        SpectralBracket b = spectral_radius(probe, Rational(1, 10000000));
        if (b.lo > 2) { exceeded = true; break; }
    }
    if (!exceeded)
        throw std::runtime_error(
            "hoffman_limit: lambda1(G,v,n) stays <= 2; use the closed form instead");
    IntPoly p0 = char_poly(base);
    IntPoly pm1 = char_poly(base.with_vertex_removed(v));
    auto f = [&](double x) {
        double theta = (x + std::sqrt(x * x - 4)) / 2;
        return theta * p0.eval_d(x) - pm1.eval_d(x);
    };
    Graph big = append_path(base, v, cap);
    double upper = spectral_radius(big, Rational(1, 1000000)).value() + 1;
    // Locate the last sign change on (2, upper] and bisect.
    const int kGrid = 4000;
    double lo = -1, hi = -1;
    const double kStart = 2 + 1e-12;
    double prev_x = kStart, prev_f = f(prev_x);
    for (int i = 1; i <= kGrid; ++i) {
        double x = kStart + (upper - kStart) * i / kGrid;
        double fx = f(x);
        if ((prev_f < 0) != (fx < 0)) {
            lo = prev_x;
            hi = x;
        }
        prev_x = x;
        prev_f = fx;
    }
    if (lo < 0)
        throw std::runtime_error("hoffman_limit: no sign change of the limit equation");
    for (int i = 0; i < 200; ++i) {
        double mid = (lo + hi) / 2;
        if ((f(lo) < 0) == (f(mid) < 0))
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

BallWitness ball_radius_witness(const Graph& g, int k) {
    int n = g.order();
    if (n == 0) throw std::invalid_argument("ball_radius_witness: empty graph");
    double avg_deg = 2.0 * g.edge_count() / n;
    if (avg_deg < 2)
        throw std::invalid_argument("ball_radius_witness: average degree < 2");
    BallWitness w;
    for (int v = 0; v < n; ++v) {
        Graph ball = g.ball(v, k);
        double val = ball.edge_count() == 0 ? 0.0 : adjacency_eigenvalues(ball)[0];
        if (w.vertex < 0 || val > w.value) {
            w.value = val;
            w.vertex = v;
        }
    }
    w.bound = 2 * std::cos(M_PI / (k + 2)) * std::sqrt(avg_deg - 1);
    if (w.value < w.bound - 1e-9)
        throw std::logic_error("ball_radius_witness: average-degree bound violated");
    return w;
}

}  // namespace eqlines
