#include "eqlines/subgraph.hpp"

#include <algorithm>
#include <vector>

namespace eqlines {

namespace {

struct Matcher {
    const Graph& host;
    const Graph& pattern;
    bool induced;
    std::vector<int> order;   // pattern vertices in match order
    std::vector<int> map;     // pattern vertex -> host vertex (-1 unset)
    uint64_t used = 0;

    Matcher(const Graph& h, const Graph& p, bool ind)
        : host(h), pattern(p), induced(ind), map(p.order(), -1) {
        // Match order: start from a max-degree vertex, then always prefer a
        // vertex adjacent to an already ordered one (connectivity keeps
        // candidate sets tight); ties by degree descending.
        int n = p.order();
        std::vector<bool> placed(n, false);
        for (int step = 0; step < n; ++step) {
            int best = -1;
            bool best_attached = false;
            for (int v = 0; v < n; ++v) {
                if (placed[v]) continue;
                bool attached = false;
                for (int u : order)
                    if (p.has_edge(u, v)) { attached = true; break; }
                if (best < 0 || (attached && !best_attached) ||
                    (attached == best_attached && p.degree(v) > p.degree(best))) {
                    best = v;
                    best_attached = attached;
                }
            }
            order.push_back(best);
            placed[best] = true;
        }
    }

    bool extend(size_t step) {
        if (step == order.size()) return true;
        int pv = order[step];
        uint64_t candidates = host.vertex_mask() & ~used;
        for (size_t k = 0; k < step; ++k) {
            int pu = order[k];
            if (pattern.has_edge(pu, pv))
                candidates &= host.neighbors(map[pu]);
            else if (induced)
                candidates &= ~host.neighbors(map[pu]);
        }
        bool found = false;
        for_each_bit(candidates, [&](int hv) {
            if (found) return;
            if (host.degree(hv) < pattern.degree(pv)) return;
            map[pv] = hv;
            used |= uint64_t{1} << hv;
            if (extend(step + 1)) found = true;
            used &= ~(uint64_t{1} << hv);
            map[pv] = -1;
        });
        return found;
    }
};

}  // namespace

bool contains_subgraph(const Graph& host, const Graph& pattern) {
    if (pattern.order() > host.order()) return false;
    if (pattern.order() == 0) return true;
    if (pattern.edge_count() > host.edge_count()) return false;
    Matcher m(host, pattern, /*induced=*/false);
    return m.extend(0);
}

bool contains_induced_subgraph(const Graph& host, const Graph& pattern) {
    if (pattern.order() > host.order()) return false;
    if (pattern.order() == 0) return true;
    Matcher m(host, pattern, /*induced=*/true);
    return m.extend(0);
}

}  // namespace eqlines
