#include "eqlines/forbidden.hpp"

#include <json.hpp>

#include <algorithm>

#include "eqlines/canonical.hpp"
#include "eqlines/families.hpp"
#include "eqlines/graph6.hpp"
#include "eqlines/spectral.hpp"
#include "eqlines/subgraph.hpp"

namespace eqlines {

namespace {

// Certified lambda1(g1) > lambda1(g2), bracket comparison with exact fallback.
bool certified_radius_greater(const Graph& g1, const Graph& g2) {
    for (int bits : {20, 40, 60}) {
        Rational tol(1, BigInt(1) << bits);
        SpectralBracket b1 = spectral_radius(g1, tol);
        SpectralBracket b2 = spectral_radius(g2, tol);
        if (b1.lo > b2.hi) return true;
        if (b1.hi < b2.lo) return false;
    }
    AlgebraicReal l1 = spectral_radius_exact(g1);
    AlgebraicReal l2 = spectral_radius_exact(g2);
    return l1.compare(l2) > 0;
}

void sort_members(std::vector<Graph>& members) {
    std::vector<std::pair<CanonicalForm, Graph>> keyed;
    keyed.reserve(members.size());
    for (const Graph& g : members) keyed.push_back(canonicalize(g));
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    keyed.erase(std::unique(keyed.begin(), keyed.end(),
                            [](const auto& a, const auto& b) { return a.first == b.first; }),
                keyed.end());
    members.clear();
    for (auto& [cf, g] : keyed) members.push_back(g);
}

}  // namespace

int choose_m(const AlgebraicReal& lam) {
    if (lam.compare(Rational(2)) < 0)
        throw std::invalid_argument("choose_m: requires lambda >= 2 (case 2)");
    AlgebraicReal ls = lambda_star();
    if (lam.compare(ls) >= 0)
        throw UnsupportedLambda("lambda >= lambda_star: no finite characterization");
    for (int m = 2; m <= 256; ++m) {
        AlgebraicReal am = alpha_constant(m);
        int c = am.compare(lam);
        if (c == 0)
            throw UnsupportedLambda("lambda equals alpha_" + std::to_string(m) +
                                    ": no finite characterization");
        if (c > 0) return m;
    }
    throw SearchBudgetExceeded("choose_m: scan exhausted below lambda_star", 256);
}

int choose_n(const AlgebraicReal& lam, int m, int max_scan) {
    for (int n = m + 1; n <= max_scan; ++n) {
        if (n + 4 > kMaxVertices || m + n + 2 > kMaxVertices || n + 5 > kMaxVertices)
            throw SearchBudgetExceeded("choose_n: family member exceeds the vertex cap",
                                       static_cast<uint64_t>(n));
        bool ok = compare_radius(make_family(FamilySpec::A(n)), lam) == Trichotomy::Greater &&
                  compare_radius(make_family(FamilySpec::E(m, n)), lam) == Trichotomy::Greater &&
                  compare_radius(make_family(FamilySpec::F(n)), lam) == Trichotomy::Greater;
        if (ok && m >= 3) {
            for (int m1 = 1; m1 < m && ok; ++m1)
                for (int m2 = 1; m2 < m && ok; ++m2) {
                    Graph b_next = make_family(FamilySpec::B(m1, n + 1, m2));
                    if (compare_radius(b_next, lam) == Trichotomy::Greater) ok = false;
                }
            if (ok) {
                // Monotone-decrease guard on the chosen window: the B-family
                // radii must strictly decrease, which extends the n+1 check
                // to every larger path length.
                for (int m1 = 1; m1 < m; ++m1)
                    for (int m2 = 1; m2 < m; ++m2) {
                        if (m1 == 1 && m2 == 1) continue;  // constant radius 2
                        Graph a = make_family(FamilySpec::B(m1, n + 1, m2));
                        Graph b = make_family(FamilySpec::B(m1, n + 2, m2));
                        if (!certified_radius_greater(a, b))
                            throw std::logic_error(
                                "choose_n: B-family monotonicity check failed");
                    }
            }
        }
        if (ok) return n;
    }
    throw SearchBudgetExceeded("choose_n: scan cap reached", static_cast<uint64_t>(max_scan));
}

ForbiddenFamily build_family(const AlgebraicReal& lam, const BuildBudget& budget) {
    if (lam.compare(Rational(0)) <= 0)
        throw std::invalid_argument("build_family: lambda must be positive");
    AlgebraicReal ls = lambda_star();
    if (lam.compare(ls) >= 0)
        throw UnsupportedLambda("lambda >= lambda_star: no finite characterization");

    ForbiddenFamily fam{lam, 0, 0, 0, {}, {}, true, 0};
    std::vector<Graph> members;

    EnumSpec espec;
    espec.max_vertices = budget.max_vertices;
    espec.connected_only = true;
    EnumLimits elim;
    elim.max_extensions = budget.max_extensions;

    if (lam.compare(Rational(2)) < 0) {
        fam.case_id = 1;
        // Smallest n with lambda1(P_n) > lambda; the closed form
        // 2cos(pi/(n+1)) locates it, certified by compare_radius.
        int n = -1;
        for (int cand = 2; cand <= 62; ++cand) {
            if (compare_radius(Graph::path(cand), lam) == Trichotomy::Greater) {
                n = cand;
                break;
            }
        }
        if (n < 0)
            throw SearchBudgetExceeded("build_family: path threshold beyond vertex cap", 62);
        fam.n = n;
        members.push_back(Graph::star(4));
        members.push_back(Graph::path(n));
        espec.max_degree = 3;
        espec.max_diameter = n - 1;
        fam.log.push_back("case 1: S4, P_" + std::to_string(n) +
                          ", enumerated graphs with max degree <= 3, diameter < " +
                          std::to_string(n));
    } else {
        fam.case_id = 2;
        int m = choose_m(lam);
        int n = choose_n(lam, m, budget.max_n_scan);
        fam.m = m;
        fam.n = n;
        members.push_back(Graph::star(5));
        members.push_back(make_family(FamilySpec::A(n)));
        for (int j = 0; j <= n; ++j)
            members.push_back(make_family(FamilySpec::B(m, j, 1)));
        for (int j = 2; j <= m + n; ++j) {
            if (j + 2 > kMaxVertices)
                throw SearchBudgetExceeded("build_family: D_j exceeds the vertex cap",
                                           static_cast<uint64_t>(j));
            members.push_back(make_family(FamilySpec::D(j)));
        }
        members.push_back(make_family(FamilySpec::E(m, n)));
        members.push_back(make_family(FamilySpec::F(n)));
        espec.max_degree = 4;
        espec.max_radius = m + n - 1;
        fam.log.push_back("case 2: m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                          ", G0 plus graphs with max degree <= 4, radius < " +
                          std::to_string(m + n));
    }

    // Soundness audit: every explicit member must certifiably leave F(lambda).
    for (const Graph& g : members)
        if (compare_radius(g, lam) != Trichotomy::Greater)
            throw std::logic_error("build_family: explicit member fails lambda1 > lambda");

    EnumResult enumerated = enumerate_connected(espec, elim);
    fam.complete = enumerated.complete;
    fam.extensions_used = enumerated.extensions_used;
    if (!enumerated.complete)
        fam.log.push_back("enumeration budget exceeded: family is partial");
    for (const Graph& g : enumerated.graphs)
        if (compare_radius(g, lam) == Trichotomy::Greater) members.push_back(g);

    sort_members(members);
    fam.members = std::move(members);
    fam.log.push_back("members: " + std::to_string(fam.members.size()));
    return fam;
}

ForbiddenFamily minimize_family(const ForbiddenFamily& fam) {
    ForbiddenFamily out = fam;
    std::vector<Graph> ms = fam.members;
    sort_members(ms);
    std::vector<bool> keep(ms.size(), true);
    for (size_t i = 0; i < ms.size(); ++i)
        for (size_t j = 0; j < ms.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            // Members are sorted by order, so j < i whenever it can embed.
            if (ms[j].order() <= ms[i].order() && contains_subgraph(ms[i], ms[j]))
                keep[i] = false;
        }
    out.members.clear();
    for (size_t i = 0; i < ms.size(); ++i)
        if (keep[i]) out.members.push_back(ms[i]);
    out.log.push_back("minimized: " + std::to_string(out.members.size()) + " of " +
                      std::to_string(ms.size()));
    return out;
}

std::vector<Graph> minimal_obstructions(const AlgebraicReal& lam, int up_to,
                                        const EnumLimits& limits) {
    EnumSpec spec;
    spec.max_vertices = up_to;
    EnumResult res = enumerate_connected(spec, limits);
    if (!res.complete)
        throw SearchBudgetExceeded("minimal_obstructions: enumeration budget",
                                   res.extensions_used);
    std::vector<Graph> out;
    for (const Graph& g : res.graphs) {
        if (g.order() <= 1) continue;
        if (compare_radius(g, lam) != Trichotomy::Greater) continue;
        bool minimal = true;
        for (int v = 0; v < g.order() && minimal; ++v)
            if (compare_radius(g.with_vertex_removed(v), lam) == Trichotomy::Greater)
                minimal = false;
        for (int u = 0; u < g.order() && minimal; ++u)
            for_each_bit(g.neighbors(u), [&](int v) {
                if (!minimal || u > v) return;
                Graph h = g;
                h.remove_edge(u, v);
                if (compare_radius(h, lam) == Trichotomy::Greater) minimal = false;
            });
        if (minimal) out.push_back(g);
    }
    return out;
}

OracleReport oracle_check(const ForbiddenFamily& fam, int up_to, const EnumLimits& limits) {
    EnumSpec spec;
    spec.max_vertices = up_to;
    EnumResult res = enumerate_connected(spec, limits);
    if (!res.complete)
        throw SearchBudgetExceeded("oracle_check: enumeration budget", res.extensions_used);
    OracleReport rep;
    for (const Graph& g : res.graphs) {
        ++rep.checked;
        bool excluded = false;
        for (const Graph& member : fam.members) {
            if (member.order() > g.order()) continue;
            if (contains_subgraph(g, member)) {
                excluded = true;
                break;
            }
        }
        bool outside = compare_radius(g, fam.lam) == Trichotomy::Greater;
        if (outside && !excluded) rep.missing.push_back(g);
        if (!outside && excluded) rep.spurious.push_back(g);
    }
    return rep;
}

std::string family_to_json(const ForbiddenFamily& fam) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    nlohmann::ordered_json lam;
    std::vector<std::string> coeffs;
    for (const auto& c : fam.lam.minpoly().coeffs()) coeffs.push_back(c.get_str());
    lam["minpoly"] = coeffs;
    lam["interval"] = {fam.lam.lo().get_str(), fam.lam.hi().get_str()};
    lam["value"] = fam.lam.to_double();
    j["lambda"] = lam;
    j["case"] = fam.case_id;
    if (fam.case_id == 2) j["m"] = fam.m;
    j["n"] = fam.n;
    std::vector<std::string> g6;
    for (const Graph& g : fam.members) g6.push_back(write_graph6(g));
    j["members"] = g6;
    j["complete"] = fam.complete;
    j["extensions_used"] = fam.extensions_used;
    j["log"] = fam.log;
    return j.dump(2);
}

}  // namespace eqlines
