#include "eqlines/graph.hpp"

#include <algorithm>

namespace eqlines {

Graph Graph::induced(uint64_t mask) const {
    mask &= vertex_mask();
    std::array<int, kMaxVertices> newlabel{};
    int k = 0;
    for_each_bit(mask, [&](int v) { newlabel[v] = k++; });
    Graph g(k);
    for_each_bit(mask, [&](int u) {
        for_each_bit(adj_[u] & mask, [&](int v) {
            if (u < v) g.add_edge(newlabel[u], newlabel[v]);
        });
    });
    return g;
}

Graph Graph::with_vertex_removed(int v) const {
    check_vertex(v);
    return induced(vertex_mask() & ~(uint64_t{1} << v));
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("relabeled: permutation size mismatch");
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for_each_bit(adj_[u], [&](int v) {
            if (u < v) g.add_edge(perm[u], perm[v]);
        });
    return g;
}

std::vector<int> Graph::bfs_dist(int src) const {
    check_vertex(src);
    std::vector<int> dist(n_, -1);
    dist[src] = 0;
    uint64_t frontier = uint64_t{1} << src;
    uint64_t seen = frontier;
    int d = 0;
    while (frontier) {
        uint64_t next = 0;
        for_each_bit(frontier, [&](int v) { next |= adj_[v]; });
        next &= ~seen & vertex_mask();
        ++d;
        for_each_bit(next, [&](int v) { dist[v] = d; });
        seen |= next;
        frontier = next;
    }
    return dist;
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    auto dist = bfs_dist(0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<uint64_t> Graph::components() const {
    std::vector<uint64_t> comps;
    uint64_t left = vertex_mask();
    while (left) {
        int src = std::countr_zero(left);
        uint64_t comp = uint64_t{1} << src;
        uint64_t frontier = comp;
        while (frontier) {
            uint64_t next = 0;
            for_each_bit(frontier, [&](int v) { next |= adj_[v]; });
            next &= ~comp;
            comp |= next;
            frontier = next;
        }
        comps.push_back(comp);
        left &= ~comp;
    }
    return comps;
}

int Graph::eccentricity(int v) const {
    auto dist = bfs_dist(v);
    int e = 0;
    for (int d : dist) {
        if (d < 0) throw std::runtime_error("eccentricity: graph is disconnected");
        e = std::max(e, d);
    }
    return e;
}

int Graph::diameter() const {
    if (n_ == 0) throw std::runtime_error("diameter: empty graph");
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, eccentricity(v));
    return d;
}

int Graph::radius() const {
    if (n_ == 0) throw std::runtime_error("radius: empty graph");
    int r = kMaxVertices + 1;
    for (int v = 0; v < n_; ++v) r = std::min(r, eccentricity(v));
    return r;
}

Graph Graph::ball(int v, int k) const {
    check_vertex(v);
    if (k < 0) throw std::invalid_argument("ball: negative radius");
    auto dist = bfs_dist(v);
    uint64_t mask = 0;
    for (int u = 0; u < n_; ++u)
        if (dist[u] >= 0 && dist[u] <= k) mask |= uint64_t{1} << u;
    return induced(mask);
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph Graph::star(int leaves) {
    if (leaves < 0) throw std::invalid_argument("star: negative leaf count");
    Graph g(leaves + 1);
    for (int i = 0; i < leaves; ++i) g.add_edge(leaves, i);
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

}  // namespace eqlines
