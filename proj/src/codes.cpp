#include "eqlines/codes.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "eqlines/realsolve.hpp"
#include "eqlines/spectral.hpp"

namespace eqlines {

namespace {

std::string alpha_to_label(const AlgebraicReal& alpha) {
    if (alpha.is_rational()) return alpha.rational_value().get_str();
    return alpha.describe();
}

long double norm_inf(const SphericalCode& c) {
    long double m = 0;
    for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j) m = std::max(m, std::abs(c.entry(i, j)));
    return m;
}

int float_rank(const std::vector<long double>& gram, int n, double tol) {
    if (n == 0) return 0;
    auto eig = sym_eigenvalues_ld(gram, n);
    long double scale = std::max<long double>(1, std::abs(eig.front()));
    int r = 0;
    for (long double e : eig)
        if (std::abs(e) > tol * scale) ++r;
    return r;
}

}  // namespace

CodeAudit audit_code(const SphericalCode& code, double tol) {
    CodeAudit a;
    a.diagonal_ok = true;
    a.L_ok = true;
    const int n = code.n;
    if (n == 0) {
        a.psd_ok = true;
        a.rank_ok = true;
        return a;
    }
    if (code.exact) {
        for (int i = 0; i < n; ++i)
            if (code.gram_q.at(i, i) != 1) a.diagonal_ok = false;
        for (int i = 0; i < n && a.L_ok; ++i)
            for (int j = i + 1; j < n; ++j) {
                bool in_l = false;
                for (const Rational& v : code.L_q)
                    if (code.gram_q.at(i, j) == v) { in_l = true; break; }
                if (!in_l) { a.L_ok = false; break; }
            }
        PsdResult psd = psd_check(code.gram_q);
        a.psd_ok = psd.psd;
        a.rank = psd.psd ? psd.rank : rank_of(code.gram_q);
        a.rank_ok = a.rank <= code.dim;
    } else {
        for (int i = 0; i < n; ++i)
            if (std::abs(code.entry(i, i) - 1.0L) > tol) a.diagonal_ok = false;
        for (int i = 0; i < n && a.L_ok; ++i)
            for (int j = i + 1; j < n; ++j) {
                bool in_l = false;
                for (long double v : code.L_f)
                    if (std::abs(code.entry(i, j) - v) <= tol) { in_l = true; break; }
                if (!in_l) { a.L_ok = false; break; }
            }
        auto eig = sym_eigenvalues_ld(code.gram_f, n);
        long double min_e = eig.empty() ? 0 : eig.back();
        a.min_eigenvalue = static_cast<double>(min_e);
        long double scale = std::max<long double>(1, norm_inf(code));
        a.psd_ok = min_e >= -tol * scale;
        a.rank = float_rank(code.gram_f, n, tol);
        a.rank_ok = a.rank <= code.dim;
    }
    return a;
}

AlgebraicReal lam_of_alpha(const AlgebraicReal& alpha) {
    if (alpha.compare(Rational(0)) <= 0 || alpha.compare(Rational(1)) >= 0)
        throw std::invalid_argument("lam_of_alpha: alpha must be in (0,1)");
    // (1/alpha - 1)/2
    return alpha.inverse().plus_rational(-1).times_rational(Rational(1, 2));
}

AlgebraicReal alpha_of_lam(const AlgebraicReal& lam) {
    if (lam.compare(Rational(0)) <= 0)
        throw std::invalid_argument("alpha_of_lam: lambda must be positive");
    return lam.times_rational(2).plus_rational(1).inverse();
}

Rational lam_of_alpha(const Rational& alpha) {
    if (!(alpha > 0 && alpha < 1))
        throw std::invalid_argument("lam_of_alpha: alpha must be in (0,1)");
    return (1 - alpha) / (2 * alpha);
}

Rational alpha_of_lam(const Rational& lam) {
    if (!(lam > 0)) throw std::invalid_argument("alpha_of_lam: lambda must be positive");
    return Rational(1) / (1 + 2 * lam);
}

SphericalCode code_from_graph(const Graph& g, const AlgebraicReal& lam) {
    Trichotomy t = compare_radius(g, lam);
    if (t == Trichotomy::Greater)
        throw std::invalid_argument(
            "code_from_graph: lambda1 > lambda, I - A/lambda is not PSD");
    SphericalCode code;
    code.n = g.order();
    code.dim = g.order() - eigen_multiplicity(g, lam);
    if (lam.is_rational()) {
        const Rational& l = lam.rational_value();
        code.exact = true;
        code.gram_q = SymMatrixQ::identity_minus_adj_over(g, l);
        code.L_q = {Rational(-1) / l, Rational(0)};
    } else {
        code.exact = false;
        long double l = lam.to_long_double();
        code.gram_f.assign(static_cast<size_t>(code.n) * code.n, 0.0L);
        for (int i = 0; i < code.n; ++i) {
            code.gram_f[static_cast<size_t>(i) * code.n + i] = 1.0L;
            for_each_bit(g.neighbors(i), [&](int j) {
                code.gram_f[static_cast<size_t>(i) * code.n + j] = -1.0L / l;
            });
        }
        code.L_f = {-1.0L / l, 0.0L};
    }
    return code;
}

SphericalCode kronecker_lift(const SphericalCode& code0, const AlgebraicReal& alpha,
                             int dim_target) {
    int k = code0.dim;
    if (k < 1) throw std::invalid_argument("kronecker_lift: code0 has dimension 0");
    if (dim_target < k + 1)
        throw std::invalid_argument("kronecker_lift: need n >= k + 1");
    int m = (dim_target - 1) / k;
    int s = code0.size();
    Graph base = underlying_graph(code0).graph;
    SphericalCode out;
    out.n = m * s;
    out.dim = dim_target;
    out.alpha_label = alpha_to_label(alpha);
    auto edge = [&](int i, int j) { return base.has_edge(i, j); };
    if (alpha.is_rational()) {
        const Rational& a = alpha.rational_value();
        out.exact = true;
        out.gram_q = SymMatrixQ(out.n);
        for (int bi = 0; bi < s; ++bi)
            for (int r = 0; r < m; ++r) {
                int row = bi * m + r;
                out.gram_q.set(row, row, 1);
                for (int bj = 0; bj < s; ++bj)
                    for (int t = 0; t < m; ++t) {
                        int col = bj * m + t;
                        if (col <= row) continue;
                        bool neg = (r == t) && edge(bi, bj);
                        out.gram_q.set(row, col, neg ? -a : a);
                    }
            }
        out.L_q = {-a, a};
    } else {
        long double a = alpha.to_long_double();
        out.exact = false;
        out.gram_f.assign(static_cast<size_t>(out.n) * out.n, 0.0L);
        for (int bi = 0; bi < s; ++bi)
            for (int r = 0; r < m; ++r) {
                int row = bi * m + r;
                for (int bj = 0; bj < s; ++bj)
                    for (int t = 0; t < m; ++t) {
                        int col = bj * m + t;
                        long double v;
                        if (row == col)
                            v = 1.0L;
                        else if (r == t && edge(bi, bj))
                            v = -a;
                        else
                            v = a;
                        out.gram_f[static_cast<size_t>(row) * out.n + col] = v;
                    }
            }
        out.L_f = {-a, a};
    }
    return out;
}

UnderlyingGraphResult underlying_graph(const SphericalCode& code, double tol,
                                       int flag_budget) {
    UnderlyingGraphResult res;
    res.graph = Graph(code.n);
    for (int i = 0; i < code.n; ++i)
        for (int j = i + 1; j < code.n; ++j) {
            if (code.exact) {
                if (code.gram_q.at(i, j) < 0) res.graph.add_edge(i, j);
            } else {
                long double v = code.entry(i, j);
                if (v != 0.0L && std::abs(v) < tol) ++res.flagged;
                else if (v < 0) res.graph.add_edge(i, j);
            }
        }
    if (res.flagged > flag_budget)
        throw std::runtime_error("underlying_graph: too many ambiguous entries near 0");
    return res;
}

namespace {

// Greedy independent set by repeated max-degree deletion; falls back to a
// bounded backtracking search when the greedy set is too small.
std::vector<int> independent_set(const Graph& g, int t) {
    std::vector<bool> removed(g.order(), false);
    auto live_degree = [&](int v) {
        int d = 0;
        for_each_bit(g.neighbors(v), [&](int u) {
            if (!removed[u]) ++d;
        });
        return d;
    };
    for (;;) {
        int best = -1, bestd = 0;
        for (int v = 0; v < g.order(); ++v) {
            if (removed[v]) continue;
            int d = live_degree(v);
            if (d > bestd) { bestd = d; best = v; }
        }
        if (best < 0) break;  // edgeless
        removed[best] = true;
    }
    std::vector<int> set;
    for (int v = 0; v < g.order(); ++v)
        if (!removed[v]) set.push_back(v);
    if (static_cast<int>(set.size()) >= t) {
        set.resize(t);
        return set;
    }
    // Bounded backtracking for an independent set of size exactly t.
    std::vector<int> cur;
    uint64_t nodes = 0;
    const uint64_t cap = 2'000'000;
    std::function<bool(int)> rec = [&](int start) -> bool {
        if (static_cast<int>(cur.size()) == t) return true;
        if (++nodes > cap) return false;
        for (int v = start; v < g.order(); ++v) {
            bool ok = true;
            for (int u : cur)
                if (g.has_edge(u, v)) { ok = false; break; }
            if (!ok) continue;
            cur.push_back(v);
            if (rec(v + 1)) return true;
            cur.pop_back();
        }
        return false;
    };
    if (rec(0)) return cur;
    throw std::runtime_error("project_code: no independent set of size t found");
}

}  // namespace

ProjectResult project_code(const SphericalCode& code, const AlgebraicReal& alpha, int t) {
    if (t < 1) throw std::invalid_argument("project_code: t >= 1 required");
    // Requirement t > lambda^2 + 1, decided exactly via sqrt(t-1) > lambda.
    AlgebraicReal lam = lam_of_alpha(alpha);
    AlgebraicReal sqrt_t1 = AlgebraicReal::from_rational(Rational(t - 1)).sqrt();
    if (!(lam.compare(sqrt_t1) < 0))
        throw std::invalid_argument("project_code: need t > lambda^2 + 1");

    Graph g = underlying_graph(code).graph;
    std::vector<int> iset = independent_set(g, t);
    std::sort(iset.begin(), iset.end());
    std::vector<bool> in_i(code.n, false);
    for (int v : iset) in_i[v] = true;

    ProjectResult res;
    res.independent_size = t;

    // Switching pass: flip any outside vector with more than t/2 neighbors
    // in I (ties stay). Neighbors are negative Gram entries against I.
    std::vector<int> sign(code.n, 1);
    for (int v = 0; v < code.n; ++v) {
        if (in_i[v]) continue;
        int deg_i = 0;
        for (int u : iset)
            if (code.entry(u, v) < 0) ++deg_i;
        if (2 * deg_i > t) {
            sign[v] = -1;
            ++res.switched;
        }
    }
    auto signed_entry_q = [&](int i, int j) -> Rational {
        Rational v = code.gram_q.at(i, j);
        if (sign[i] * sign[j] < 0) v = -v;
        return v;
    };
    auto signed_entry_f = [&](int i, int j) -> long double {
        return code.entry(i, j) * sign[i] * sign[j];
    };

    // Keep the class with no I-neighbors after switching.
    std::vector<int> keep;
    for (int v = 0; v < code.n; ++v) {
        if (in_i[v]) continue;
        bool clean = true;
        for (int u : iset) {
            bool neg = code.exact ? (signed_entry_q(u, v) < 0) : (signed_entry_f(u, v) < 0);
            if (neg) { clean = false; break; }
        }
        if (clean) keep.push_back(v);
    }
    res.discarded = code.n - static_cast<int>(keep.size());

    SphericalCode out;
    out.n = static_cast<int>(keep.size());
    out.dim = code.dim;  // projection cannot increase the ambient dimension
    out.alpha_label = alpha_to_label(alpha);
    out.t_label = t;
    if (code.exact && alpha.is_rational()) {
        const Rational& a = alpha.rational_value();
        Rational c = a / (1 + (t - 1) * a);
        Rational cta = c * t * a;
        Rational denom = 1 - cta;
        out.exact = true;
        out.gram_q = SymMatrixQ(out.n);
        for (int i = 0; i < out.n; ++i)
            for (int j = i; j < out.n; ++j) {
                Rational v = signed_entry_q(keep[i], keep[j]);
                out.gram_q.set(i, j, (v - cta) / denom);
            }
        Rational hi = a / (1 + t * a);           // = 1/(t + 1/alpha)
        Rational lo = (-a - cta) / denom;        // the negative L(alpha,t) value
        out.L_q = {lo, hi};
        res.L_values_q = {lo, hi};
        for (int i = 0; i < out.n; ++i) {
            if (out.gram_q.at(i, i) != 1)
                throw std::logic_error("project_code: diagonal not fixed by the map");
            for (int j = i + 1; j < out.n; ++j) {
                const Rational& v = out.gram_q.at(i, j);
                if (v != lo && v != hi)
                    throw std::logic_error("project_code: entry off L(alpha,t)");
            }
        }
    } else {
        long double a = alpha.to_long_double();
        long double c = a / (1 + (t - 1) * a);
        long double cta = c * t * a;
        long double denom = 1 - cta;
        out.exact = false;
        out.gram_f.assign(static_cast<size_t>(out.n) * out.n, 0.0L);
        for (int i = 0; i < out.n; ++i)
            for (int j = 0; j < out.n; ++j) {
                long double v = signed_entry_f(keep[i], keep[j]);
                out.gram_f[static_cast<size_t>(i) * out.n + j] = (v - cta) / denom;
            }
        long double hi = a / (1 + t * a);
        long double lo = (-a - cta) / denom;
        out.L_f = {lo, hi};
        res.L_values_f = {lo, hi};
        for (int i = 0; i < out.n; ++i) {
            if (std::abs(out.gram_f[static_cast<size_t>(i) * out.n + i] - 1.0L) > 1e-9)
                throw std::logic_error("project_code: diagonal not fixed by the map");
            for (int j = i + 1; j < out.n; ++j) {
                long double v = out.gram_f[static_cast<size_t>(i) * out.n + j];
                if (std::abs(v - lo) > 1e-9 && std::abs(v - hi) > 1e-9)
                    throw std::logic_error("project_code: entry off L(alpha,t)");
            }
        }
    }
    res.code = std::move(out);
    return res;
}

RankBoundReport rank_bound_check(const SphericalCode& code, const AlgebraicReal& alpha,
                                 int t, int n) {
    RankBoundReport rep;
    rep.n = n;
    Graph g = underlying_graph(code).graph;
    if (code.size() == 0) {
        rep.identity_ok = true;
        rep.pass = true;
        rep.detail = "empty code: vacuous";
        return rep;
    }
    if (code.exact && alpha.is_rational()) {
        const Rational& a = alpha.rational_value();
        Rational lam = lam_of_alpha(a);
        Rational T = Rational(t) + 1 / a;
        Rational f = 1 + 1 / (T - 1);
        SymMatrixQ lhs = code.gram_q.scaled(f);
        SymMatrixQ rhs = SymMatrixQ::identity_minus_adj_over(g, lam) +
                         SymMatrixQ::ones(code.size()).scaled(1 / (T - 1));
        rep.identity_ok = lhs == rhs;
        rep.rank_ia = rank_of(SymMatrixQ::identity_minus_adj_over(g, lam));
        rep.rank_m = rank_of(code.gram_q);
    } else {
        long double a = alpha.to_long_double();
        long double lam = (1 - a) / (2 * a);
        long double T = t + 1 / a;
        long double f = 1 + 1 / (T - 1);
        rep.identity_ok = true;
        for (int i = 0; i < code.n && rep.identity_ok; ++i)
            for (int j = 0; j < code.n; ++j) {
                long double lhs = f * code.entry(i, j);
                long double rhs = (i == j)
                                      ? 1.0L + 1.0L / (T - 1)
                                      : (g.has_edge(i, j) ? -1.0L / lam : 0.0L) +
                                            1.0L / (T - 1);
                if (std::abs(lhs - rhs) > 1e-9) { rep.identity_ok = false; break; }
            }
        std::vector<long double> ia(static_cast<size_t>(code.n) * code.n, 0.0L);
        for (int i = 0; i < code.n; ++i) {
            ia[static_cast<size_t>(i) * code.n + i] = 1.0L;
            for_each_bit(g.neighbors(i), [&](int j) {
                ia[static_cast<size_t>(i) * code.n + j] = -1.0L / lam;
            });
        }
        rep.rank_ia = float_rank(ia, code.n, 1e-9);
        rep.rank_m = code.exact ? rank_of(code.gram_q) : float_rank(code.gram_f, code.n, 1e-9);
    }
    rep.pass = rep.identity_ok && rep.rank_ia <= rep.rank_m + 1 && rep.rank_m + 1 <= n + 1;
    if (!rep.pass)
        rep.detail = "identity_ok=" + std::to_string(rep.identity_ok) +
                     " rank_ia=" + std::to_string(rep.rank_ia) +
                     " rank_m=" + std::to_string(rep.rank_m) + " n=" + std::to_string(n);
    return rep;
}

SphericalCode simplex_like_code(const AlgebraicReal& alpha, int n) {
    SphericalCode code;
    code.n = n;
    code.dim = n;
    code.alpha_label = alpha_to_label(alpha);
    if (alpha.is_rational()) {
        const Rational& a = alpha.rational_value();
        code.exact = true;
        code.gram_q = SymMatrixQ(n);
        for (int i = 0; i < n; ++i) {
            code.gram_q.set(i, i, 1);
            for (int j = i + 1; j < n; ++j) code.gram_q.set(i, j, a);
        }
        code.L_q = {a};
    } else {
        long double a = alpha.to_long_double();
        code.exact = false;
        code.gram_f.assign(static_cast<size_t>(n) * n, a);
        for (int i = 0; i < n; ++i) code.gram_f[static_cast<size_t>(i) * n + i] = 1.0L;
        code.L_f = {a};
    }
    return code;
}

std::string code_to_json(const SphericalCode& code) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    if (!code.alpha_label.empty()) j["alpha"] = code.alpha_label;
    if (code.t_label > 0) j["t"] = code.t_label;
    j["exact"] = code.exact;
    j["n"] = code.n;
    j["dim"] = code.dim;
    if (code.exact) {
        std::vector<std::string> l;
        for (const Rational& v : code.L_q) l.push_back(v.get_str());
        j["L"] = l;
        std::vector<std::string> g;
        g.reserve(static_cast<size_t>(code.n) * code.n);
        for (int i = 0; i < code.n; ++i)
            for (int jj = 0; jj < code.n; ++jj) g.push_back(code.gram_q.at(i, jj).get_str());
        j["gram"] = g;
    } else {
        std::vector<double> l;
        for (long double v : code.L_f) l.push_back(static_cast<double>(v));
        j["L"] = l;
        std::vector<double> g;
        g.reserve(static_cast<size_t>(code.n) * code.n);
        for (long double v : code.gram_f) g.push_back(static_cast<double>(v));
        j["gram"] = g;
    }
    return j.dump(2);
}

SphericalCode code_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    SphericalCode code;
    code.exact = j.at("exact").get<bool>();
    code.n = j.at("n").get<int>();
    code.dim = j.at("dim").get<int>();
    if (j.contains("alpha")) code.alpha_label = j.at("alpha").get<std::string>();
    if (j.contains("t")) code.t_label = j.at("t").get<int>();
    if (code.exact) {
        code.gram_q = SymMatrixQ(code.n);
        const auto& g = j.at("gram");
        if (static_cast<int>(g.size()) != code.n * code.n)
            throw std::runtime_error("code_from_json: gram size mismatch");
        for (int i = 0; i < code.n; ++i)
            for (int jj = 0; jj < code.n; ++jj) {
                Rational v(g[static_cast<size_t>(i) * code.n + jj].get<std::string>());
                v.canonicalize();
                code.gram_q.set(i, jj, v);
            }
        for (const auto& v : j.at("L")) {
            Rational r(v.get<std::string>());
            r.canonicalize();
            code.L_q.push_back(r);
        }
    } else {
        const auto& g = j.at("gram");
        if (static_cast<int>(g.size()) != code.n * code.n)
            throw std::runtime_error("code_from_json: gram size mismatch");
        for (const auto& v : g) code.gram_f.push_back(v.get<double>());
        for (const auto& v : j.at("L")) code.L_f.push_back(v.get<double>());
    }
    return code;
}

}  // namespace eqlines
