#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "eqlines/poly.hpp"
#include "eqlines/qmatrix.hpp"
#include "eqlines/realsolve.hpp"

using namespace eqlines;

namespace {

IntPoly make(std::initializer_list<long> coeffs_ascending) {
    std::vector<BigInt> c;
    for (long v : coeffs_ascending) c.push_back(BigInt(v));
    return IntPoly(std::move(c));
}

// p_n, q_n per the path/cycle characteristic-polynomial recursions.
IntPoly path_poly(int n) {
    IntPoly pm1 = IntPoly::constant(1), p = make({0, 1});
    if (n == 0) return pm1;
    for (int k = 2; k <= n; ++k) {
        IntPoly next = make({0, 1}) * p - pm1;
        pm1 = std::move(p);
        p = std::move(next);
    }
    return p;
}

IntPoly cycle_poly(int n) {
    // q_{n} = p_{n} - p_{n-2} - 2 for n >= 3
    return path_poly(n) - path_poly(n - 2) - IntPoly::constant(2);
}

}  // namespace

TEST_CASE("poly arithmetic basics") {
    IntPoly a = make({1, 2});       // 1 + 2x
    IntPoly b = make({-1, 0, 3});   // -1 + 3x^2
    CHECK((a * b) == make({-1, -2, 3, 6}));
    CHECK((a + b) == make({0, 2, 3}));
    CHECK((a - a).is_zero());
    CHECK(a.eval_z(BigInt(5)) == 11);
    CHECK(make({0, 0, 0}).is_zero());
    CHECK(a.derivative() == make({2}));
    CHECK(make({2, 4, 6}).content() == 2);
    CHECK(make({2, 4, 6}).primitive() == make({1, 2, 3}));
}

TEST_CASE("sign_at is exact at rationals") {
    IntPoly p = make({-2, 0, 1});  // x^2 - 2
    CHECK(p.sign_at(Rational(1)) == -1);
    CHECK(p.sign_at(Rational(3, 2)) == 1);
    CHECK(p.sign_at(Rational(7, 5)) == -1);     // 49/25 < 2
    CHECK(p.sign_at(Rational(99, 70)) == 1);    // 9801/4900 > 2
    IntPoly lin = make({-3, 2});                // 2x - 3
    CHECK(lin.sign_at(Rational(3, 2)) == 0);
}

TEST_CASE("division, gcd, squarefree") {
    IntPoly p = make({-2, 0, 1});
    IntPoly q = make({1, 1});
    IntPoly prod = p * q;
    IntPoly quot;
    REQUIRE(divides(prod, p, &quot));
    CHECK(quot == q);
    CHECK(!divides(p, q));

    IntPoly g = poly_gcd(p * q, p * make({5, 3}));
    CHECK(g == p);

    IntPoly sq = p * p * q;
    IntPoly sf = squarefree_part(sq);
    CHECK(sf == p * q);
}

TEST_CASE("sturm root counting") {
    IntPoly p = make({-2, 0, 1});  // roots +-sqrt(2)
    CHECK(count_roots(p, Rational(0), Rational(2)) == 1);
    CHECK(count_roots(p, Rational(-2), Rational(2)) == 2);
    CHECK(count_roots(p, Rational(2), Rational(3)) == 0);

    // Wilkinson-ish: (x-1)(x-2)(x-3)
    IntPoly w = make({-1, 1}) * make({-2, 1}) * make({-3, 1});
    CHECK(count_roots(w, Rational(0), Rational(4)) == 3);
    CHECK(count_roots(w, Rational(3, 2), Rational(5, 2)) == 1);

    // Repeated roots count once.
    IntPoly rep = make({-1, 1}) * make({-1, 1}) * make({-2, 1});
    CHECK(count_roots(rep, Rational(0), Rational(3)) == 2);
}

TEST_CASE("root isolation") {
    IntPoly w = make({-1, 1}) * make({-2, 1}) * make({-3, 1});
    auto roots = isolate_real_roots(w);
    REQUIRE(roots.size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(roots[i].first < Rational(i + 1));
        CHECK(Rational(i + 1) < roots[i].second);
    }
    // x^2 + 1: no real roots.
    CHECK(isolate_real_roots(make({1, 0, 1})).empty());
    // Exact rational roots are isolated too.
    auto r2 = isolate_real_roots(make({0, 0, 1, 1}));  // x^2(x+1)
    CHECK(r2.size() == 2);
}

TEST_CASE("char_poly examples") {
    CHECK(char_poly(Graph::path(3)) == make({0, -2, 0, 1}));        // x^3 - 2x
    CHECK(char_poly(Graph::cycle(3)) == make({-2, -3, 0, 1}));      // x^3 - 3x - 2
    CHECK(char_poly(Graph(1)) == make({0, 1}));                     // x
    CHECK(char_poly(Graph::complete(2)) == make({-1, 0, 1}));       // x^2 - 1
    CHECK(char_poly(Graph::star(4)) == make({0, 0, 0, -4, 0, 1}));  // x^5 - 4x^3
}

TEST_CASE("char_poly matches path/cycle recursions up to n = 20") {
    for (int n = 1; n <= 20; ++n)
        CHECK(char_poly(Graph::path(n)) == path_poly(n));
    for (int n = 3; n <= 20; ++n)
        CHECK(char_poly(Graph::cycle(n)) == cycle_poly(n));
}

TEST_CASE("charpoly vanishes at every float eigenvalue") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 2) g.add_edge(i, j);
        IntPoly p = char_poly(g);
        for (double ev : adjacency_eigenvalues(g))
            CHECK(std::abs(p.eval_d(ev)) < 1e-6 * std::pow(n + 1.0, n / 2.0 + 1));
    }
}

TEST_CASE("bareiss determinant") {
    std::vector<std::vector<BigInt>> m = {
        {BigInt(2), BigInt(1)},
        {BigInt(7), BigInt(4)},
    };
    CHECK(det_bareiss(m) == 1);
    std::vector<std::vector<BigInt>> z = {
        {BigInt(0), BigInt(1), BigInt(2)},
        {BigInt(1), BigInt(0), BigInt(3)},
        {BigInt(4), BigInt(5), BigInt(0)},
    };
    // det = 0*(0-15) - 1*(0-12) + 2*(5-0) = 12 + 10 = 22
    CHECK(det_bareiss(z) == 22);
    std::vector<std::vector<BigInt>> sing = {
        {BigInt(1), BigInt(2)},
        {BigInt(2), BigInt(4)},
    };
    CHECK(det_bareiss(sing) == 0);
}

TEST_CASE("rank, psd, trace bound") {
    SymMatrixQ j = SymMatrixQ::ones(6);
    CHECK(rank_of(j) == 1);
    CHECK(psd_check(j).psd);
    CHECK(trace_rank_lower_bound(j) == 1);

    SymMatrixQ i5 = SymMatrixQ::identity(5);
    CHECK(rank_of(i5) == 5);
    CHECK(trace_rank_lower_bound(i5) == 5);

    // I - A/2 for K3: rank 2, PSD, trace bound (3)^2 / 4.5 = 2.
    SymMatrixQ m = SymMatrixQ::identity_minus_adj_over(Graph::complete(3), Rational(2));
    CHECK(rank_of(m) == 2);
    CHECK(psd_check(m).psd);
    CHECK(psd_check(m).rank == 2);
    CHECK(trace_rank_lower_bound(m) == 2);

    // I - A/1 for K3 is not PSD (lambda1 = 2 > 1).
    SymMatrixQ bad = SymMatrixQ::identity_minus_adj_over(Graph::complete(3), Rational(1));
    CHECK(!psd_check(bad).psd);

    SymMatrixQ zero(4);
    CHECK(trace_rank_lower_bound(zero) == 0);
    CHECK(rank_of(zero) == 0);
}

TEST_CASE("trace bound below exact rank on random rational matrices") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        int n = 1 + static_cast<int>(rng() % 5);
        SymMatrixQ m(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                long num = static_cast<long>(rng() % 11) - 5;
                long den = 1 + static_cast<long>(rng() % 4);
                m.set(i, j, Rational(num, den));
            }
        Rational bound = trace_rank_lower_bound(m);
        CHECK(bound <= rank_of(m));
    }
}
