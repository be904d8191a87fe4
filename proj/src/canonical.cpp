#include "eqlines/canonical.hpp"

#include <algorithm>

namespace eqlines {

namespace {

// Equitable color refinement. Colors are ranks 0..C-1; the rank order is a
// function of (old color, sorted neighbor-color multiset) so the result is
// equivariant under relabeling.
void refine(const Graph& g, std::vector<int>& color) {
    const int n = g.order();
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sigs(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.reserve(g.degree(v) + 1);
            s.push_back(color[v]);
            for_each_bit(g.neighbors(v), [&](int u) { s.push_back(color[u]); });
            std::sort(s.begin() + 1, s.end());
            sigs[v] = {std::move(s), v};
        }
        std::sort(sigs.begin(), sigs.end());
        std::vector<int> next(n);
        int c = -1;
        const std::vector<int>* prev = nullptr;
        for (auto& [sig, v] : sigs) {
            if (!prev || sig != *prev) ++c;
            next[v] = c;
            prev = &sig;
        }
        if (next == color) return;
        color = std::move(next);
    }
}

int color_count(const std::vector<int>& color) {
    int c = 0;
    for (int x : color) c = std::max(c, x + 1);
    return c;
}

struct Searcher {
    const Graph& g;
    int n;
    std::string best;
    std::vector<int> best_perm;
    bool have_best = false;

    explicit Searcher(const Graph& graph) : g(graph), n(graph.order()) {}

    std::string leaf_cert(const std::vector<int>& color) const {
        // Discrete coloring: color is the permutation old -> new.
        std::string bits((static_cast<size_t>(n) * (n - 1) / 2 + 7) / 8, '\0');
        std::vector<int> inv(n);
        for (int v = 0; v < n; ++v) inv[color[v]] = v;
        size_t bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if (g.has_edge(inv[i], inv[j]))
                    bits[bit / 8] |= static_cast<char>(1 << (7 - bit % 8));
        return bits;
    }

    void search(std::vector<int> color) {
        refine(g, color);
        int c = color_count(color);
        if (c == n) {
            std::string cert = leaf_cert(color);
            if (!have_best || cert < best) {
                best = std::move(cert);
                best_perm = std::move(color);
                have_best = true;
            }
            return;
        }
        // Branch on the first non-singleton cell in color order: the cell
        // choice is equivariant, so the minimum over leaves is invariant.
        std::vector<int> count(c, 0);
        for (int v = 0; v < n; ++v) ++count[color[v]];
        int target = -1;
        for (int i = 0; i < c; ++i)
            if (count[i] > 1) { target = i; break; }
        for (int v = 0; v < n; ++v) {
            if (color[v] != target) continue;
            std::vector<int> child(n);
            for (int u = 0; u < n; ++u)
                child[u] = color[u] + (color[u] > target ? 1 : 0);
            for (int u = 0; u < n; ++u)
                if (color[u] == target) child[u] = target + 1;
            child[v] = target;  // v alone keeps the low rank
            search(std::move(child));
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    CanonicalForm f;
    f.n = g.order();
    f.cert.push_back(static_cast<char>(g.order()));
    if (g.order() > 0) {
        Searcher s(g);
        s.search(std::vector<int>(g.order(), 0));
        f.cert += s.best;
    }
    return f;
}

std::vector<int> canonical_labeling(const Graph& g) {
    if (g.order() == 0) return {};
    Searcher s(g);
    s.search(std::vector<int>(g.order(), 0));
    return s.best_perm;
}

Graph canonical_graph(const Graph& g) { return g.relabeled(canonical_labeling(g)); }

std::pair<CanonicalForm, Graph> canonicalize(const Graph& g) {
    CanonicalForm f;
    f.n = g.order();
    f.cert.push_back(static_cast<char>(g.order()));
    if (g.order() == 0) return {f, g};
    Searcher s(g);
    s.search(std::vector<int>(g.order(), 0));
    f.cert += s.best;
    return {std::move(f), g.relabeled(s.best_perm)};
}

}  // namespace eqlines
