#include "eqlines/order.hpp"

#include <json.hpp>

#include <stdexcept>

#include "eqlines/graph6.hpp"
#include "eqlines/spectral.hpp"

namespace eqlines {

OrderResult spectral_order(const AlgebraicReal& lam, int max_order,
                           const EnumLimits& limits) {
    if (lam.compare(Rational(0)) <= 0)
        throw std::invalid_argument("spectral_order: lambda must be positive");
    OrderResult res;

    // Analytic pre-filter, only on a provably irreducible minimal polynomial:
    // a spectral radius is a totally real algebraic integer and the largest
    // of its conjugates.
    AlgebraicReal reduced = lam;
    reduced.reduce();
    if (reduced.is_rational()) {
        const Rational& r = reduced.rational_value();
        if (r.get_den() != 1) {
            res.kind = OrderResult::Kind::InfiniteAnalytic;
            res.reason = "not an algebraic integer";
            return res;
        }
    } else if (reduced.irreducibility() == Irreducibility::Proven) {
        if (!reduced.monic_up_to_sign()) {
            res.kind = OrderResult::Kind::InfiniteAnalytic;
            res.reason = "not an algebraic integer";
            return res;
        }
        LambdaClass cls = classify_lambda(reduced);
        if (cls == LambdaClass::NotTotallyReal) {
            res.kind = OrderResult::Kind::InfiniteAnalytic;
            res.reason = "not totally real";
            return res;
        }
        if (cls == LambdaClass::TotallyRealNotMax) {
            res.kind = OrderResult::Kind::InfiniteAnalytic;
            res.reason = "not the largest conjugate";
            return res;
        }
    }

    for (int ord = 1; ord <= max_order; ++ord) {
        EnumSpec spec;
        spec.max_vertices = ord;
        EnumResult layer = enumerate_connected(spec, limits);
        if (!layer.complete)
            throw std::runtime_error("spectral_order: enumeration budget exceeded");
        for (const Graph& g : layer.graphs) {
            if (g.order() != ord) continue;
            if (compare_radius(g, lam) == Trichotomy::Equal) {
                res.kind = OrderResult::Kind::Finite;
                res.k = ord;
                res.witness = g;
                // Degree lower bound: deg(lambda) <= k(lambda).
                if (reduced.irreducibility() == Irreducibility::Proven &&
                    reduced.minpoly().degree() > ord)
                    throw std::logic_error("spectral_order: degree bound violated");
                return res;
            }
        }
    }
    res.kind = OrderResult::Kind::InfiniteUpTo;
    res.bound = max_order;
    return res;
}

Rational order_coefficient_finite(int k) {
    if (k < 2)
        throw std::invalid_argument(
            "order_coefficient: k >= 2 required (a 1-vertex graph has radius 0)");
    return Rational(k) / Rational(k - 1);
}

Rational order_coefficient(const OrderResult& r) {
    if (r.finite()) return order_coefficient_finite(r.k);
    return Rational(1);
}

std::string order_to_json(const AlgebraicReal& lam, const OrderResult& r) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    nlohmann::ordered_json l;
    std::vector<std::string> coeffs;
    for (const auto& c : lam.minpoly().coeffs()) coeffs.push_back(c.get_str());
    l["minpoly"] = coeffs;
    l["interval"] = {lam.lo().get_str(), lam.hi().get_str()};
    l["value"] = lam.to_double();
    j["lambda"] = l;
    switch (r.kind) {
        case OrderResult::Kind::Finite:
            j["k"] = r.k;
            j["witness"] = write_graph6(*r.witness);
            break;
        case OrderResult::Kind::InfiniteUpTo:
            j["infinite_up_to"] = r.bound;
            break;
        case OrderResult::Kind::InfiniteAnalytic:
            j["infinite_analytic"] = r.reason;
            break;
    }
    j["coefficient"] = order_coefficient(r).get_str();
    return j.dump(2);
}

}  // namespace eqlines
