#ifndef EQLINES_ORDER_HPP
#define EQLINES_ORDER_HPP

#include <optional>
#include <string>

#include "eqlines/algebraic.hpp"
#include "eqlines/enumerate.hpp"
#include "eqlines/graph.hpp"

namespace eqlines {

/// Outcome of the spectral-radius-order search k(lambda).
struct OrderResult {
    enum class Kind { Finite, InfiniteUpTo, InfiniteAnalytic };
    Kind kind = Kind::InfiniteUpTo;
    int k = 0;             // Finite
    int bound = 0;         // InfiniteUpTo: no witness with <= bound vertices
    std::string reason;    // InfiniteAnalytic
    std::optional<Graph> witness;

    bool finite() const { return kind == Kind::Finite; }
};

/// Smallest order of a connected graph with spectral radius exactly lambda
/// (the spectral radius of a disconnected graph is attained on a component,
/// so connected graphs suffice). Scans orders 1..max_order with certified
/// equality tests; an analytic pre-filter returns infinity outright when
/// lambda provably fails the necessary conditions (totally real algebraic
/// integer, largest among its conjugates).
OrderResult spectral_order(const AlgebraicReal& lam, int max_order = 10,
                           const EnumLimits& limits = {});

/// k/(k-1) for finite k >= 2; 1 for the infinite cases.
Rational order_coefficient(const OrderResult& r);
Rational order_coefficient_finite(int k);

std::string order_to_json(const AlgebraicReal& lam, const OrderResult& r);

}  // namespace eqlines

#endif
