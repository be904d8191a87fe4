#ifndef EQLINES_QMATRIX_HPP
#define EQLINES_QMATRIX_HPP

#include <vector>

#include "eqlines/graph.hpp"
#include "eqlines/poly.hpp"

namespace eqlines {

/// Dense symmetric matrix with exact rational entries.
class SymMatrixQ {
public:
    SymMatrixQ() = default;
    explicit SymMatrixQ(int n) : n_(n), a_(static_cast<size_t>(n) * n, Rational(0)) {}

    int order() const { return n_; }
    const Rational& at(int i, int j) const { return a_[idx(i, j)]; }
    void set(int i, int j, const Rational& v) {
        a_[idx(i, j)] = v;
        a_[idx(j, i)] = v;
    }

    static SymMatrixQ identity(int n);
    static SymMatrixQ ones(int n);
    static SymMatrixQ adjacency(const Graph& g);
    /// I - A/lambda for a rational lambda > 0.
    static SymMatrixQ identity_minus_adj_over(const Graph& g, const Rational& lambda);

    SymMatrixQ operator+(const SymMatrixQ& o) const;
    SymMatrixQ operator-(const SymMatrixQ& o) const;
    SymMatrixQ scaled(const Rational& s) const;

    Rational trace() const;
    /// tr(M^2); for symmetric M this is the sum of squared entries.
    Rational trace_square() const;

    bool operator==(const SymMatrixQ& o) const { return n_ == o.n_ && a_ == o.a_; }

private:
    size_t idx(int i, int j) const { return static_cast<size_t>(i) * n_ + j; }
    int n_ = 0;
    std::vector<Rational> a_;
};

/// Exact rank over the rationals.
int rank_of(const SymMatrixQ& m);

struct PsdResult {
    bool psd = false;
    int rank = 0;  // valid when psd
};

/// Exact positive-semidefiniteness test by congruence diagonalization.
PsdResult psd_check(const SymMatrixQ& m);

/// (tr M)^2 / tr(M^2), a lower bound for rank(M); 0 for the zero matrix.
Rational trace_rank_lower_bound(const SymMatrixQ& m);

/// Fraction-free Bareiss determinant; consumes its argument.
BigInt det_bareiss(std::vector<std::vector<BigInt>> m);

/// Exact characteristic polynomial det(xI - A) of the adjacency matrix,
/// via Bareiss determinants at integer points and exact interpolation.
IntPoly char_poly(const Graph& g);

}  // namespace eqlines

#endif
