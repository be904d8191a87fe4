#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "eqlines/qmatrix.hpp"
#include "eqlines/realsolve.hpp"
#include "eqlines/spectral.hpp"

using namespace eqlines;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((rng() >> 11) * 0x1p-53 < p) g.add_edge(i, j);
    return g;
}

Graph random_connected(std::mt19937_64& rng, int n, double p) {
    for (;;) {
        Graph g = random_graph(rng, n, p);
        if (g.connected()) return g;
    }
}

}  // namespace

TEST_CASE("Perron simplicity on random connected graphs (n <= 8)") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = random_connected(rng, n, 0.5);
        AlgebraicReal l1 = spectral_radius_exact(g);
        CHECK(eigen_multiplicity(g, l1) == 1);
    }
}

TEST_CASE("strict monotonicity under proper connected subgraphs") {
    std::mt19937_64 rng(102);
    int done = 0;
    while (done < 100) {
        int n = 3 + static_cast<int>(rng() % 6);
        Graph g = random_connected(rng, n, 0.5);
        // Proper connected subgraph: drop a vertex or an edge, connectivity kept.
        Graph h(1);
        if (rng() % 2 == 0) {
            int v = static_cast<int>(rng() % n);
            h = g.with_vertex_removed(v);
        } else {
            if (g.edge_count() == 0) continue;
            int pick = static_cast<int>(rng() % g.edge_count());
            Graph cand = g;
            int seen = 0;
            for (int u = 0; u < n; ++u)
                for_each_bit(g.neighbors(u), [&](int v) {
                    if (u < v && seen++ == pick) cand.remove_edge(u, v);
                });
            h = cand;
        }
        if (!h.connected() || h.edge_count() == 0) continue;
        if (h.order() == g.order() && h.edge_count() == g.edge_count()) continue;
        AlgebraicReal l1 = spectral_radius_exact(g);
        CHECK(compare_radius(h, l1) == Trichotomy::Less);
        ++done;
    }
}

TEST_CASE("subdivision strictly decreases the radius above 2") {
    std::mt19937_64 rng(103);
    int done = 0;
    while (done < 100) {
        int n = 4 + static_cast<int>(rng() % 5);
        Graph g = random_connected(rng, n, 0.55);
        if (compare_radius(g, Rational(2)) != Trichotomy::Greater) continue;
        // Random non-end-path edge.
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for_each_bit(g.neighbors(u), [&](int v) {
                if (u < v && !is_end_path_edge(g, u, v)) edges.push_back({u, v});
            });
        if (edges.empty()) continue;
        auto [u, v] = edges[rng() % edges.size()];
        Graph plus = subdivide_edge(g, u, v);
        AlgebraicReal l1 = spectral_radius_exact(g);
        CHECK(compare_radius(plus, l1) == Trichotomy::Less);
        ++done;
    }
}

TEST_CASE("Weyl inequality on random rational symmetric pairs") {
    std::mt19937_64 rng(104);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        std::vector<double> a(n * n), b(n * n), sum(n * n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                double av = (static_cast<double>(rng() % 21) - 10) / (1 + rng() % 4);
                double bv = (static_cast<double>(rng() % 21) - 10) / (1 + rng() % 4);
                a[i * n + j] = a[j * n + i] = av;
                b[i * n + j] = b[j * n + i] = bv;
                sum[i * n + j] = sum[j * n + i] = av + bv;
            }
        auto ea = sym_eigenvalues(a, n);
        auto eb = sym_eigenvalues(b, n);
        auto es = sym_eigenvalues(sum, n);
        for (int i = 0; i + 1 <= n; ++i)
            for (int j = 0; i + j + 1 <= n; ++j)
                CHECK(es[i + j] <= ea[i] + eb[j] + 1e-9);
    }
}

TEST_CASE("ball bounds: average-degree and min-degree versions") {
    std::mt19937_64 rng(105);
    int done = 0;
    while (done < 60) {
        int n = 5 + static_cast<int>(rng() % 6);
        Graph g = random_connected(rng, n, 0.5);
        if (2.0 * g.edge_count() / n < 2) continue;
        int k = 1 + static_cast<int>(rng() % 3);
        BallWitness w = ball_radius_witness(g, k);  // asserts the bound itself
        CHECK(w.value >= w.bound - 1e-9);
        // Min-degree variant: holds at every vertex.
        if (g.min_degree() >= 2) {
            double bound2 = 2.0 * k / (k + 1) * std::sqrt(g.min_degree() - 1);
            for (int v = 0; v < n; ++v) {
                Graph ball = g.ball(v, k);
                double val =
                    ball.edge_count() == 0 ? 0.0 : adjacency_eigenvalues(ball)[0];
                CHECK(val >= bound2 - 1e-9);
            }
        }
        ++done;
    }
}

TEST_CASE("trace bound stays below the exact rank") {
    std::mt19937_64 rng(106);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        SymMatrixQ m(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                long num = static_cast<long>(rng() % 13) - 6;
                long den = 1 + static_cast<long>(rng() % 5);
                m.set(i, j, Rational(num, den));
            }
        CHECK(trace_rank_lower_bound(m) <= rank_of(m));
    }
}
