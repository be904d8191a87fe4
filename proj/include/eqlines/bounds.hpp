#ifndef EQLINES_BOUNDS_HPP
#define EQLINES_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "eqlines/algebraic.hpp"
#include "eqlines/codes.hpp"
#include "eqlines/graph.hpp"
#include "eqlines/order.hpp"

namespace eqlines {

/// One row of the upper-bound table for N_alpha(n).
struct BoundRow {
    std::string name;        // relative | spectral-order | degree |
                             // not-totally-real | not-max-conjugate | high-lambda
    std::string hypothesis;  // human-readable hypothesis and its status
    bool applies = false;
    bool concrete = false;   // valid at this n (vs asymptotic coefficient only)
    double value = 0;        // bound when concrete, slope coefficient otherwise
    std::optional<Rational> exact;  // exact value when rational
    std::string note;
};

/// Every upper bound whose hypotheses hold for (alpha, n), each tagged with
/// its hypothesis check. Asymptotic rows report the linear coefficient with
/// the O(1)/o(1) term suppressed.
std::vector<BoundRow> size_upper_bounds(const AlgebraicReal& alpha, int n,
                                        int max_order_for_k = 8);

/// floor((n-1)/(k-1)) * k for finite k; n when k is infinite.
long long lower_bound_count(int n, const OrderResult& k);

/// As above, but also materialize the construction (code_from_graph +
/// kronecker_lift, or the simplex-like Gram when k is infinite) and check
/// the count and the code invariants. Returns the audit outcome.
struct LowerBoundWitness {
    long long count = 0;
    bool materialized = false;
    bool audit_pass = false;
    std::string detail;
};
LowerBoundWitness lower_bound_count_materialized(const AlgebraicReal& alpha, int n,
                                                 const OrderResult& k);

/// Smallest t satisfying both t > lambda^2 + 1 and the family inequality
/// 1 - lambda1(G0)/lambda + v(G0)/(t + 1/alpha - 1) < 0 for every member.
int choose_t(const std::vector<Graph>& members, const AlgebraicReal& alpha);

/// Parameter calculator for the high-lambda upper bound: given eps, the
/// smallest k with 2cos(pi/(k+2)) > 2/sqrt(1+4eps), the implied average
/// degree threshold d = (lambda/lambda')^2 + 1, the smallest D with
/// sqrt(D) > lambda, and the smallest admissible t.
struct UpperBoundParams {
    int k = 0;
    double lambda_prime = 0;
    double d = 0;
    int D = 0;
    int t_min = 0;
};
UpperBoundParams upper_bound_parameters(const AlgebraicReal& alpha, double eps);

std::string bounds_to_json(const AlgebraicReal& alpha, int n,
                           const std::vector<BoundRow>& rows);

}  // namespace eqlines

#endif
