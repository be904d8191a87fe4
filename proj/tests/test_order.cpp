#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqlines/canonical.hpp"
#include "eqlines/order.hpp"
#include "eqlines/spectral.hpp"

using namespace eqlines;

namespace {

AlgebraicReal sqrt_int(long v) { return AlgebraicReal::from_int(v).sqrt(); }

}  // namespace

TEST_CASE("spectral order of the small constants") {
    OrderResult r1 = spectral_order(AlgebraicReal::from_int(1), 5);
    REQUIRE(r1.finite());
    CHECK(r1.k == 2);
    CHECK(canonical_form(*r1.witness) == canonical_form(Graph::complete(2)));

    OrderResult r2 = spectral_order(sqrt_int(2), 5);
    REQUIRE(r2.finite());
    CHECK(r2.k == 3);
    CHECK(canonical_form(*r2.witness) == canonical_form(Graph::path(3)));

    OrderResult r3 = spectral_order(AlgebraicReal::from_int(2), 5);
    REQUIRE(r3.finite());
    CHECK(r3.k == 3);
    CHECK(canonical_form(*r3.witness) == canonical_form(Graph::complete(3)));

    OrderResult rs3 = spectral_order(sqrt_int(3), 6);
    REQUIRE(rs3.finite());
    CHECK(rs3.k == 4);
    CHECK(canonical_form(*rs3.witness) == canonical_form(Graph::star(3)));

    OrderResult rk4 = spectral_order(AlgebraicReal::from_int(3), 6);
    REQUIRE(rk4.finite());
    CHECK(rk4.k == 4);
    CHECK(canonical_form(*rk4.witness) == canonical_form(Graph::complete(4)));
}

TEST_CASE("analytic infinite verdicts") {
    OrderResult ls = spectral_order(lambda_star(), 6);
    CHECK(ls.kind == OrderResult::Kind::InfiniteAnalytic);
    CHECK(ls.reason == "not totally real");

    OrderResult a2 = spectral_order(alpha_constant(2), 6);
    CHECK(a2.kind == OrderResult::Kind::InfiniteAnalytic);
    CHECK(a2.reason == "not totally real");

    // Rational non-integers are not algebraic integers.
    OrderResult r = spectral_order(AlgebraicReal::from_rational(Rational(3, 2)), 6);
    CHECK(r.kind == OrderResult::Kind::InfiniteAnalytic);
    CHECK(r.reason == "not an algebraic integer");

    // Totally real but dominated by a conjugate: smaller root of x^2-3x+1.
    AlgebraicReal small(IntPoly{std::vector<BigInt>{1, -3, 1}}, Rational(1, 4),
                        Rational(1, 2));
    OrderResult rs = spectral_order(small, 6);
    CHECK(rs.kind == OrderResult::Kind::InfiniteAnalytic);
    CHECK(rs.reason == "not the largest conjugate");
}

TEST_CASE("bounded-evidence infinite verdict") {
    // sqrt(5) > 2 is totally real and maximal; the smallest graph with
    // radius sqrt(5) is S5 on 6 vertices, so a scan capped at 5 reports
    // bounded evidence while a scan to 6 finds the star.
    OrderResult capped = spectral_order(sqrt_int(5), 5);
    CHECK(capped.kind == OrderResult::Kind::InfiniteUpTo);
    CHECK(capped.bound == 5);

    OrderResult full = spectral_order(sqrt_int(5), 6);
    REQUIRE(full.finite());
    CHECK(full.k == 6);
    CHECK(canonical_form(*full.witness) == canonical_form(Graph::star(5)));
}

TEST_CASE("witness minimality: no smaller graph achieves equality") {
    for (auto& [lam, k] : std::vector<std::pair<AlgebraicReal, int>>{
             {AlgebraicReal::from_int(1), 2},
             {sqrt_int(2), 3},
             {AlgebraicReal::from_int(2), 3},
             {sqrt_int(3), 4}}) {
        OrderResult r = spectral_order(lam, 6);
        REQUIRE(r.finite());
        CHECK(r.k == k);
        EnumSpec spec;
        spec.max_vertices = k - 1;
        for (const Graph& g : enumerate_connected(spec).graphs)
            CHECK(compare_radius(g, lam) != Trichotomy::Equal);
    }
}

TEST_CASE("degree lower bound holds on finite results") {
    OrderResult r = spectral_order(sqrt_int(3), 6);
    REQUIRE(r.finite());
    CHECK(2 <= r.k);  // deg(sqrt 3) = 2 <= k = 4
}

TEST_CASE("coefficients") {
    OrderResult fin;
    fin.kind = OrderResult::Kind::Finite;
    fin.k = 2;
    CHECK(order_coefficient(fin) == 2);
    fin.k = 3;
    CHECK(order_coefficient(fin) == Rational(3, 2));
    OrderResult inf;
    inf.kind = OrderResult::Kind::InfiniteAnalytic;
    CHECK(order_coefficient(inf) == 1);
    CHECK_THROWS(order_coefficient_finite(1));
}

TEST_CASE("order JSON") {
    AlgebraicReal two = AlgebraicReal::from_int(2);
    OrderResult r = spectral_order(two, 4);
    std::string js = order_to_json(two, r);
    CHECK(js.find("\"k\": 3") != std::string::npos);
    CHECK(js.find("witness") != std::string::npos);

    std::string js2 = order_to_json(lambda_star(), spectral_order(lambda_star(), 4));
    CHECK(js2.find("infinite_analytic") != std::string::npos);
}
