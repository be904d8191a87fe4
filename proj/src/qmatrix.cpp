#include "eqlines/qmatrix.hpp"

#include <stdexcept>

namespace eqlines {

SymMatrixQ SymMatrixQ::identity(int n) {
    SymMatrixQ m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

SymMatrixQ SymMatrixQ::ones(int n) {
    SymMatrixQ m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.set(i, j, 1);
    return m;
}

SymMatrixQ SymMatrixQ::adjacency(const Graph& g) {
    SymMatrixQ m(g.order());
    for (int i = 0; i < g.order(); ++i)
        for_each_bit(g.neighbors(i), [&](int j) {
            if (i < j) m.set(i, j, 1);
        });
    return m;
}

SymMatrixQ SymMatrixQ::identity_minus_adj_over(const Graph& g, const Rational& lambda) {
    if (!(lambda > 0))
        throw std::invalid_argument("identity_minus_adj_over: lambda must be > 0");
    SymMatrixQ m = identity(g.order());
    Rational w = Rational(-1) / lambda;
    for (int i = 0; i < g.order(); ++i)
        for_each_bit(g.neighbors(i), [&](int j) {
            if (i < j) m.set(i, j, w);
        });
    return m;
}

SymMatrixQ SymMatrixQ::operator+(const SymMatrixQ& o) const {
    if (n_ != o.n_) throw std::invalid_argument("SymMatrixQ: order mismatch");
    SymMatrixQ r(n_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

SymMatrixQ SymMatrixQ::operator-(const SymMatrixQ& o) const {
    if (n_ != o.n_) throw std::invalid_argument("SymMatrixQ: order mismatch");
    SymMatrixQ r(n_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

SymMatrixQ SymMatrixQ::scaled(const Rational& s) const {
    SymMatrixQ r(n_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
}

Rational SymMatrixQ::trace() const {
    Rational t = 0;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

Rational SymMatrixQ::trace_square() const {
    Rational t = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) t += at(i, j) * at(i, j);
    return t;
}

int rank_of(const SymMatrixQ& m) {
    int n = m.order();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pivot = -1;
        for (int r = rank; r < n; ++r)
            if (a[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = rank + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rational f = a[r][col] / a[rank][col];
            for (int cc = col; cc < n; ++cc) a[r][cc] -= f * a[rank][cc];
        }
        ++rank;
    }
    return rank;
}

PsdResult psd_check(const SymMatrixQ& m) {
    int n = m.order();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    std::vector<bool> active(n, true);
    PsdResult res;
    for (;;) {
        int pivot = -1;
        for (int i = 0; i < n; ++i) {
            if (!active[i]) continue;
            int s = sgn(a[i][i]);
            if (s < 0) return {false, 0};
            if (s > 0 && pivot < 0) pivot = i;
        }
        if (pivot < 0) {
            // All remaining diagonal entries are 0; PSD forces zero rows.
            for (int i = 0; i < n; ++i) {
                if (!active[i]) continue;
                for (int j = 0; j < n; ++j)
                    if (active[j] && a[i][j] != 0) return {false, 0};
            }
            res.psd = true;
            return res;
        }
        Rational d = a[pivot][pivot];
        for (int i = 0; i < n; ++i) {
            if (!active[i] || i == pivot || a[i][pivot] == 0) continue;
            Rational f = a[i][pivot] / d;
            for (int j = 0; j < n; ++j)
                if (active[j]) a[i][j] -= f * a[pivot][j];
        }
        active[pivot] = false;
        ++res.rank;
    }
}

Rational trace_rank_lower_bound(const SymMatrixQ& m) {
    Rational t2 = m.trace_square();
    if (t2 == 0) return 0;
    Rational t = m.trace();
    return t * t / t2;
}

BigInt det_bareiss(std::vector<std::vector<BigInt>> m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) { p = r; break; }
            if (p < 0) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                BigInt v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

IntPoly char_poly(const Graph& g) {
    int n = g.order();
    if (n == 0) return IntPoly::constant(1);
    // Evaluate det(xI - A) at x = 0..n, then interpolate exactly.
    std::vector<BigInt> xs(n + 1), ys(n + 1);
    for (int k = 0; k <= n; ++k) {
        std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, BigInt(0)));
        for (int i = 0; i < n; ++i) {
            m[i][i] = k;
            for_each_bit(g.neighbors(i), [&](int j) { m[i][j] = -1; });
        }
        xs[k] = k;
        ys[k] = det_bareiss(std::move(m));
    }
    // Newton divided differences over Q.
    std::vector<Rational> dd(n + 1);
    for (int k = 0; k <= n; ++k) dd[k] = Rational(ys[k]);
    for (int level = 1; level <= n; ++level)
        for (int k = n; k >= level; --k) {
            Rational num = dd[k] - dd[k - 1];
            Rational den(xs[k] - xs[k - level]);
            dd[k] = num / den;
        }
    std::vector<Rational> poly{dd[n]};
    for (int k = n - 1; k >= 0; --k) {
        // poly = poly*(x - xs[k]) + dd[k]
        std::vector<Rational> next(poly.size() + 1, Rational(0));
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= poly[i] * Rational(xs[k]);
        }
        next[0] += dd[k];
        poly = std::move(next);
    }
    std::vector<BigInt> out(poly.size());
    for (size_t i = 0; i < poly.size(); ++i) {
        if (poly[i].get_den() != 1)
            throw std::logic_error("char_poly: interpolation produced non-integer");
        out[i] = poly[i].get_num();
    }
    IntPoly p{std::move(out)};
    if (p.degree() != n || p.lc() != 1)
        throw std::logic_error("char_poly: result is not monic of degree n");
    return p;
}

}  // namespace eqlines
