#ifndef EQLINES_GRAPH_HPP
#define EQLINES_GRAPH_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqlines {

inline constexpr int kMaxVertices = 64;

/// Small undirected simple graph on at most 64 vertices.
/// Adjacency rows are single machine words; values are cheap to copy
/// and immutable in spirit (mutation only during construction).
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n) {
        if (n < 0 || n > kMaxVertices)
            throw std::invalid_argument("Graph: order must be in [0, 64]");
        adj_.fill(0);
    }

    int order() const { return n_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[u] >> v) & 1u;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: no loops");
        adj_[u] |= uint64_t{1} << v;
        adj_[v] |= uint64_t{1} << u;
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        adj_[u] &= ~(uint64_t{1} << v);
        adj_[v] &= ~(uint64_t{1} << u);
    }

    uint64_t neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return std::popcount(neighbors(v)); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    int min_degree() const {
        if (n_ == 0) return 0;
        int d = kMaxVertices;
        for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    int edge_count() const {
        int m = 0;
        for (int v = 0; v < n_; ++v) m += degree(v);
        return m / 2;
    }

    uint64_t vertex_mask() const {
        return n_ == 64 ? ~uint64_t{0} : (uint64_t{1} << n_) - 1;
    }

    bool operator==(const Graph& o) const {
        if (n_ != o.n_) return false;
        for (int v = 0; v < n_; ++v)
            if (adj_[v] != o.adj_[v]) return false;
        return true;
    }

    /// Induced subgraph on the vertices in `mask`, relabeled to 0..k-1
    /// in increasing order of original label.
    Graph induced(uint64_t mask) const;

    Graph with_vertex_removed(int v) const;

    /// perm[old_label] = new_label; perm must be a permutation of 0..n-1.
    Graph relabeled(const std::vector<int>& perm) const;

    /// BFS distances from src; -1 for unreachable vertices.
    std::vector<int> bfs_dist(int src) const;

    bool connected() const;

    /// Vertex masks of the connected components, ordered by lowest vertex.
    std::vector<uint64_t> components() const;

    int eccentricity(int v) const;
    int diameter() const;  // throws on disconnected or empty input
    int radius() const;    // throws likewise

    /// Induced subgraph on all vertices within distance k of v.
    Graph ball(int v, int k) const;

    // Named constructions used throughout.
    static Graph path(int n);
    static Graph cycle(int n);
    static Graph star(int leaves);  // K_{1,leaves}; leaves+1 vertices, hub last
    static Graph complete(int n);

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
    }

    int n_ = 0;
    std::array<uint64_t, kMaxVertices> adj_{};
};

/// Iterate set bits low to high.
template <typename F>
inline void for_each_bit(uint64_t mask, F&& f) {
    while (mask) {
        int v = std::countr_zero(mask);
        mask &= mask - 1;
        f(v);
    }
}

}  // namespace eqlines

#endif
