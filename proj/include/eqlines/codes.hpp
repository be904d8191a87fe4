#ifndef EQLINES_CODES_HPP
#define EQLINES_CODES_HPP

#include <string>
#include <vector>

#include "eqlines/algebraic.hpp"
#include "eqlines/graph.hpp"
#include "eqlines/qmatrix.hpp"

namespace eqlines {

/// Unit-vector configuration represented by its Gram matrix and declared
/// inner-product set L. Exact rational Gram when alpha (or lambda) is
/// rational; long double otherwise with 1e-9 audit tolerance.
struct SphericalCode {
    bool exact = true;
    SymMatrixQ gram_q;                // when exact
    std::vector<long double> gram_f;  // row-major, when !exact
    int n = 0;                        // number of vectors
    std::vector<Rational> L_q;        // declared inner products (exact)
    std::vector<long double> L_f;     // declared inner products (float)
    int dim = 0;                      // ambient dimension claim
    std::string alpha_label;          // serialized with the code when known
    int t_label = 0;                  // L(alpha,t) parameter when known

    int size() const { return n; }
    long double entry(int i, int j) const {
        return exact ? static_cast<long double>(gram_q.at(i, j).get_d())
                     : gram_f[static_cast<size_t>(i) * n + j];
    }
};

struct CodeAudit {
    bool diagonal_ok = false;
    bool L_ok = false;
    bool psd_ok = false;
    bool rank_ok = false;  // rank(gram) <= dim
    int rank = 0;
    double min_eigenvalue = 0;  // float path only
    bool pass() const { return diagonal_ok && L_ok && psd_ok && rank_ok; }
};

/// Check the type invariants: unit diagonal, off-diagonals in L (exact or
/// within tol), positive semidefinite (exact factorization or smallest
/// eigenvalue >= -tol * norm), rank <= dim.
CodeAudit audit_code(const SphericalCode& code, double tol = 1e-9);

/// lambda = (1-alpha)/(2alpha) and its inverse alpha = 1/(1+2lambda).
AlgebraicReal lam_of_alpha(const AlgebraicReal& alpha);
AlgebraicReal alpha_of_lam(const AlgebraicReal& lam);
Rational lam_of_alpha(const Rational& alpha);
Rational alpha_of_lam(const Rational& lam);

/// Gram I - A/lambda as a {-1/lambda, 0}-code. Requires certified
/// lambda1(g) <= lambda; dimension is order minus the multiplicity of
/// lambda as an eigenvalue.
SphericalCode code_from_graph(const Graph& g, const AlgebraicReal& lam);

/// M = (1-alpha) M0 (x) I_m + alpha J with m = floor((dim_target-1)/k):
/// a {+-alpha}-code of size m * |code0| in dimension dim_target.
SphericalCode kronecker_lift(const SphericalCode& code0, const AlgebraicReal& alpha,
                             int dim_target);

struct UnderlyingGraphResult {
    Graph graph;
    int flagged = 0;  // float entries inside (-tol, tol) but not exactly 0
};

/// Edge (i,j) iff gram[i][j] < 0; float entries in (-tol, tol) count as 0
/// and are flagged. More than flag_budget flags is an error.
UnderlyingGraphResult underlying_graph(const SphericalCode& code, double tol = 1e-9,
                                       int flag_budget = 0);

struct ProjectResult {
    SphericalCode code;        // the L(alpha,t)-code on C_alpha(empty)
    int independent_size = 0;  // |I| = t
    int switched = 0;          // vectors negated to cap their I-degree
    int discarded = 0;         // |C_alpha| - |C|, the O(1) loss
    std::vector<Rational> L_values_q;       // exact L(alpha,t) when exact
    std::vector<long double> L_values_f;    // otherwise
};

/// Switching-and-projection pipeline: find an independent set I of size t
/// in the underlying graph, switch vectors with more than t/2 neighbors in
/// I, keep the class with no neighbors in I, and project Gram entries by
/// x -> (x - c t alpha)/(1 - c t alpha) with c = alpha/(1+(t-1)alpha).
/// Requires t > lambda^2 + 1.
ProjectResult project_code(const SphericalCode& code, const AlgebraicReal& alpha, int t);

struct RankBoundReport {
    bool identity_ok = false;  // (1+1/(T-1)) M = I - A/lambda + J/(T-1)
    int rank_ia = 0;           // rank(I - A/lambda)
    int rank_m = 0;            // rank(gram)
    int n = 0;                 // ambient dimension claim
    bool pass = false;         // rank_ia <= rank_m + 1 <= n + 1
    std::string detail;
};

/// Verify the rank bound rank(I - A/lambda) <= n + 1 on an L(alpha,t)-code
/// through the Gram/adjacency identity, with T = t + 1/alpha.
RankBoundReport rank_bound_check(const SphericalCode& code, const AlgebraicReal& alpha,
                                 int t, int n);

/// Gram (1-alpha) I_n + alpha J_n: n unit vectors when no graph witness
/// exists (the k = infinity construction).
SphericalCode simplex_like_code(const AlgebraicReal& alpha, int n);

std::string code_to_json(const SphericalCode& code);
SphericalCode code_from_json(const std::string& text);

}  // namespace eqlines

#endif
