#ifndef EQLINES_FORBIDDEN_HPP
#define EQLINES_FORBIDDEN_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "eqlines/algebraic.hpp"
#include "eqlines/enumerate.hpp"
#include "eqlines/graph.hpp"

namespace eqlines {

/// lambda outside the supported range: >= lambda_star or equal to some
/// alpha_m, where no finite characterization exists.
struct UnsupportedLambda : std::runtime_error {
    explicit UnsupportedLambda(const std::string& why) : std::runtime_error(why) {}
};

struct SearchBudgetExceeded : std::runtime_error {
    SearchBudgetExceeded(const std::string& why, uint64_t partial)
        : std::runtime_error(why), partial_count(partial) {}
    uint64_t partial_count;
};

struct BuildBudget {
    int max_vertices = 10;               // enumeration cutoff
    uint64_t max_extensions = 10'000'000;
    int max_n_scan = 200;                // choose_n scan cap
};

struct ForbiddenFamily {
    AlgebraicReal lam;
    int case_id = 0;  // 1: lambda < 2; 2: lambda in [2, lambda*)
    int m = 0;        // case 2 only
    int n = 0;
    std::vector<Graph> members;  // canonical representatives, (order, cert) sorted
    std::vector<std::string> log;
    bool complete = true;  // false when the enumeration budget ran out
    uint64_t extensions_used = 0;
};

/// Smallest m >= 2 with alpha_m > lambda. Requires 2 <= lambda < lambda*.
int choose_m(const AlgebraicReal& lam);

/// Smallest n > m making A_n, E_{m,n}, F_n leave F(lambda), with the
/// B-family condition for m >= 3 certified at n+1 (monotone decrease
/// extends it to all larger n).
int choose_n(const AlgebraicReal& lam, int m, int max_scan = 200);

/// The proof-shaped finite family: explicit threshold graphs plus every
/// enumerated graph with the case's degree/metric bounds and certified
/// spectral radius > lambda.
ForbiddenFamily build_family(const AlgebraicReal& lam, const BuildBudget& budget = {});

/// Remove members containing another member as a subgraph (antichain).
ForbiddenFamily minimize_family(const ForbiddenFamily& fam);

/// All connected graphs on <= up_to vertices with lambda1 > lambda whose
/// every proper connected subgraph has lambda1 <= lambda.
std::vector<Graph> minimal_obstructions(const AlgebraicReal& lam, int up_to,
                                        const EnumLimits& limits = {});

struct OracleReport {
    int checked = 0;
    std::vector<Graph> missing;   // lambda1 > lambda but no member contained
    std::vector<Graph> spurious;  // lambda1 <= lambda yet a member contained
    bool pass() const { return missing.empty() && spurious.empty(); }
};

/// Brute-force certification: over every connected graph with <= up_to
/// vertices, membership in F(lambda) must coincide with avoiding the family.
OracleReport oracle_check(const ForbiddenFamily& fam, int up_to,
                          const EnumLimits& limits = {});

/// JSON per the external interface:
/// {lambda: {minpoly, interval}, case, m, n, members: [graph6...], log}.
std::string family_to_json(const ForbiddenFamily& fam);

}  // namespace eqlines

#endif
