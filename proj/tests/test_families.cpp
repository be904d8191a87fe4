#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "eqlines/canonical.hpp"
#include "eqlines/families.hpp"
#include "eqlines/qmatrix.hpp"
#include "eqlines/spectral.hpp"

using namespace eqlines;

namespace {

IntPoly path_poly(int n) {
    IntPoly pm1 = IntPoly::constant(1);
    IntPoly p{std::vector<BigInt>{0, 1}};
    if (n == 0) return pm1;
    for (int k = 2; k <= n; ++k) {
        IntPoly next = IntPoly{std::vector<BigInt>{0, 1}} * p - pm1;
        pm1 = std::move(p);
        p = std::move(next);
    }
    return p;
}

IntPoly cycle_poly(int n) { return path_poly(n) - path_poly(n - 2) - IntPoly::constant(2); }

}  // namespace

TEST_CASE("family constructions: shapes and counts") {
    CHECK(make_family(FamilySpec::P(4)) == Graph::path(4));
    CHECK(make_family(FamilySpec::S(3)).order() == 4);
    CHECK(make_family(FamilySpec::C(5)).order() == 5);

    Graph a1 = make_family(FamilySpec::A(1));
    CHECK(a1.order() == 5);
    CHECK(canonical_form(a1) == canonical_form(Graph::star(4)));  // A_1 = S_4

    Graph a7 = make_family(FamilySpec::A(7));
    CHECK(a7.order() == 11);
    CHECK(a7.max_degree() == 4);

    Graph e23 = make_family(FamilySpec::E(2, 3));
    CHECK(e23.order() == 7);  // m + n + 2
    CHECK(e23.max_degree() == 3);

    Graph b = make_family(FamilySpec::B(2, 3, 1));
    CHECK(b.order() == 2 + 3 + 1 + 4);
    CHECK(b.max_degree() == 3);

    Graph f2 = make_family(FamilySpec::F(2));
    CHECK(f2.order() == 7);
    CHECK(f2.radius() == 2);

    Graph d2 = make_family(FamilySpec::D(2));
    CHECK(d2.order() == 4);
    CHECK(d2.edge_count() == 4);  // triangle plus pendant

    CHECK_THROWS(make_family(FamilySpec::C(2)));
    CHECK_THROWS(make_family(FamilySpec::D(1)));
    CHECK_THROWS(make_family(FamilySpec::B(0, 1, 1)));
}

TEST_CASE("D_n characteristic polynomial identity x q_{n+1} - p_n") {
    for (int n = 2; n <= 15; ++n) {
        IntPoly r = char_poly(make_family(FamilySpec::D(n)));
        IntPoly x{std::vector<BigInt>{0, 1}};
        IntPoly expect = x * cycle_poly(n + 1) - path_poly(n);
        CHECK(r == expect);
    }
}

TEST_CASE("closed-form radii") {
    auto p3 = closed_form_radius(FamilySpec::P(3));
    REQUIRE(p3.has_value());
    CHECK(std::abs(p3->value - std::sqrt(2.0)) < 1e-12);
    AlgebraicReal sqrt2(IntPoly{std::vector<BigInt>{-2, 0, 1}}, Rational(14, 10),
                        Rational(15, 10));
    CHECK(p3->exact->compare(sqrt2) == 0);

    auto s9 = closed_form_radius(FamilySpec::S(9));
    REQUIRE(s9.has_value());
    CHECK(s9->exact->is_rational());
    CHECK(s9->exact->rational_value() == 3);

    auto c17 = closed_form_radius(FamilySpec::C(17));
    REQUIRE(c17.has_value());
    CHECK(c17->exact->rational_value() == 2);

    auto b1n1 = closed_form_radius(FamilySpec::B(1, 6, 1));
    REQUIRE(b1n1.has_value());
    CHECK(b1n1->exact->rational_value() == 2);

    CHECK(!closed_form_radius(FamilySpec::A(3)).has_value());
    CHECK(!closed_form_radius(FamilySpec::B(2, 6, 1)).has_value());
}

TEST_CASE("closed forms agree with certified spectral radii") {
    for (int n = 2; n <= 12; ++n) {
        auto cf = closed_form_radius(FamilySpec::P(n));
        SpectralBracket b = spectral_radius(Graph::path(n));
        CHECK(std::abs(cf->value - b.value()) < 1e-9);
    }
    for (int n = 1; n <= 9; ++n) {
        auto cf = closed_form_radius(FamilySpec::S(n));
        SpectralBracket b = spectral_radius(Graph::star(n));
        CHECK(std::abs(cf->value - b.value()) < 1e-9);
    }
}

TEST_CASE("B_{1,n,1} has spectral radius exactly 2") {
    for (int n = 0; n <= 12; ++n) {
        Graph b = make_family(FamilySpec::B(1, n, 1));
        CHECK(compare_radius(b, Rational(2)) == Trichotomy::Equal);
    }
}

TEST_CASE("E_{2,5} is the affine threshold with spectral radius exactly 2") {
    // Arms (1,2,5): the 9-vertex affine tree; below it stays under 2,
    // above it strictly exceeds 2.
    CHECK(compare_radius(make_family(FamilySpec::E(2, 5)), Rational(2)) ==
          Trichotomy::Equal);
    CHECK(compare_radius(make_family(FamilySpec::E(2, 4)), Rational(2)) ==
          Trichotomy::Less);
    CHECK(compare_radius(make_family(FamilySpec::E(2, 6)), Rational(2)) ==
          Trichotomy::Greater);
    // The other two arms-(1,2,n)-style thresholds: F_2 (arms 2,2,2) and
    // B_{1,n,1} sit exactly at 2 as well.
    CHECK(compare_radius(make_family(FamilySpec::F(2)), Rational(2)) ==
          Trichotomy::Equal);
}

TEST_CASE("lambda1(D_2) > 2 and the D family decreases toward lambda*") {
    CHECK(compare_radius(make_family(FamilySpec::D(2)), Rational(2)) ==
          Trichotomy::Greater);
    AlgebraicReal ls = lambda_star();
    double prev = 1e9;
    for (int n = 2; n <= 20; ++n) {
        SpectralBracket b = spectral_radius(make_family(FamilySpec::D(n)));
        CHECK(b.value() < prev);
        prev = b.value();
        CHECK(compare_radius(make_family(FamilySpec::D(n)), ls) == Trichotomy::Greater);
    }
    CHECK(std::abs(prev - ls.to_double()) < 2e-3);
}

TEST_CASE("family limits at moderate n") {
    // A_n increases toward 3/sqrt(2).
    double a_prev = 0;
    for (int n = 1; n <= 25; ++n) {
        double v = spectral_radius(make_family(FamilySpec::A(n))).value();
        CHECK(v > a_prev - 1e-12);
        a_prev = v;
    }
    CHECK(std::abs(a_prev - 3 / std::sqrt(2.0)) < 1e-4);

    // E_{2,n} increases toward alpha_2.
    double e_prev = 0;
    for (int n = 1; n <= 30; ++n) {
        double v = spectral_radius(make_family(FamilySpec::E(2, n))).value();
        CHECK(v > e_prev - 1e-12);
        e_prev = v;
    }
    CHECK(std::abs(e_prev - alpha_constant(2).to_double()) < 1e-3);

    // B_{2,n,1} decreases toward alpha_2 (it stays above it).
    AlgebraicReal a2 = alpha_constant(2);
    double b_prev = 1e9;
    for (int n = 0; n <= 20; ++n) {
        Graph b = make_family(FamilySpec::B(2, n, 1));
        double v = spectral_radius(b).value();
        CHECK(v < b_prev + 1e-12);
        b_prev = v;
        CHECK(compare_radius(b, a2) == Trichotomy::Greater);
    }
}

TEST_CASE("B_{2,n,2} decreases toward alpha_2 from above") {
    AlgebraicReal a2 = alpha_constant(2);
    double prev = 1e9;
    for (int n = 0; n <= 15; ++n) {
        Graph b = make_family(FamilySpec::B(2, n, 2));
        double v = spectral_radius(b).value();
        CHECK(v < prev + 1e-12);
        prev = v;
        CHECK(compare_radius(b, a2) == Trichotomy::Greater);
    }
    CHECK(std::abs(prev - a2.to_double()) < 2e-2);
}
