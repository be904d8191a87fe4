#include "eqlines/bounds.hpp"

#include <json.hpp>

#include <cmath>
#include <stdexcept>

#include "eqlines/forbidden.hpp"
#include "eqlines/spectral.hpp"

namespace eqlines {

namespace {

// lambda < lambda* and lambda != alpha_m for all m: the finite forbidden
// characterization exists. Returns false with a reason otherwise.
bool characterization_exists(const AlgebraicReal& lam, std::string* why) {
    AlgebraicReal ls = lambda_star();
    if (lam.compare(ls) >= 0) {
        *why = "lambda >= lambda_star";
        return false;
    }
    if (lam.compare(Rational(2)) >= 0) {
        for (int m = 2; m <= 256; ++m) {
            AlgebraicReal am = alpha_constant(m);
            int c = am.compare(lam);
            if (c == 0) {
                *why = "lambda = alpha_" + std::to_string(m);
                return false;
            }
            if (c > 0) break;
        }
    }
    *why = "lambda < lambda_star and lambda avoids {alpha_m}";
    return true;
}

}  // namespace

std::vector<BoundRow> size_upper_bounds(const AlgebraicReal& alpha, int n,
                                        int max_order_for_k) {
    if (n < 1) throw std::invalid_argument("size_upper_bounds: n >= 1");
    if (alpha.compare(Rational(0)) <= 0 || alpha.compare(Rational(1)) >= 0)
        throw std::invalid_argument("size_upper_bounds: alpha in (0,1)");
    std::vector<BoundRow> rows;
    AlgebraicReal lam = lam_of_alpha(alpha);
    AlgebraicReal reduced = lam;
    reduced.reduce();
    bool rational_alpha = alpha.is_rational();

    // Relative bound, valid when n < 1/alpha^2, i.e. alpha < 1/sqrt(n).
    {
        BoundRow r;
        r.name = "relative";
        AlgebraicReal inv_sqrt_n = AlgebraicReal::from_rational(Rational(1, n)).sqrt();
        bool applies = alpha.compare(inv_sqrt_n) < 0;
        r.hypothesis = applies ? "n < 1/alpha^2: holds" : "n < 1/alpha^2: fails";
        r.applies = applies;
        r.concrete = true;
        if (applies) {
            if (rational_alpha) {
                Rational a = alpha.rational_value();
                Rational v = (1 - a * a) / (1 - n * a * a) * n;
                r.exact = v;
                r.value = v.get_d();
            } else {
                long double a = alpha.to_long_double();
                r.value = static_cast<double>((1 - a * a) / (1 - n * a * a) * n);
            }
        }
        rows.push_back(std::move(r));
    }

    // Spectral-order coefficient from the forbidden characterization.
    {
        BoundRow r;
        r.name = "spectral-order";
        std::string why;
        bool exists = characterization_exists(lam, &why);
        r.hypothesis = "finite forbidden characterization (" + why + ")";
        r.applies = exists;
        r.concrete = false;  // O(1) term suppressed
        if (exists) {
            OrderResult k = spectral_order(lam, max_order_for_k);
            Rational coeff = order_coefficient(k);
            r.exact = coeff;
            r.value = coeff.get_d();
            if (k.finite())
                r.note = "k = " + std::to_string(k.k);
            else if (k.kind == OrderResult::Kind::InfiniteAnalytic)
                r.note = "k infinite (" + k.reason + ")";
            else
                r.note = "no witness up to order " + std::to_string(k.bound) +
                         "; coefficient assumes k infinite";
        }
        rows.push_back(std::move(r));
    }

    // Algebraic-integer classification rows need a certified minimal
    // polynomial.
    bool proven = reduced.is_rational() || reduced.irreducibility() == Irreducibility::Proven;
    bool alg_integer = false;
    LambdaClass cls = LambdaClass::TotallyRealMax;
    int degree = 0;
    if (proven) {
        if (reduced.is_rational()) {
            alg_integer = reduced.rational_value().get_den() == 1;
            degree = 1;
            cls = LambdaClass::TotallyRealMax;
        } else {
            alg_integer = reduced.monic_up_to_sign();
            degree = reduced.minpoly().degree();
            cls = classify_lambda(reduced);
        }
    }

    {
        BoundRow r;
        r.name = "not-totally-real";
        if (!proven) {
            r.hypothesis = "lambda not a totally real algebraic integer: undecided";
        } else if (!alg_integer) {
            r.hypothesis = "lambda is not an algebraic integer: holds";
            r.applies = true;
        } else if (cls == LambdaClass::NotTotallyReal) {
            r.hypothesis = "lambda has a non-real conjugate: holds";
            r.applies = true;
        } else {
            r.hypothesis = "lambda is a totally real algebraic integer: fails";
        }
        r.concrete = true;
        if (r.applies) {
            r.exact = Rational(n + 1);
            r.value = n + 1;
        }
        rows.push_back(std::move(r));
    }

    {
        BoundRow r;
        r.name = "not-max-conjugate";
        r.applies = proven && alg_integer && cls == LambdaClass::TotallyRealNotMax;
        r.hypothesis = r.applies
                           ? "totally real algebraic integer, dominated conjugate: holds"
                           : "totally real algebraic integer with a larger conjugate: fails";
        r.concrete = true;
        if (r.applies) {
            r.exact = Rational(n + 2);
            r.value = n + 2;
        }
        rows.push_back(std::move(r));
    }

    {
        BoundRow r;
        r.name = "degree";
        r.applies = proven && alg_integer && cls != LambdaClass::NotTotallyReal && degree >= 2;
        r.hypothesis = r.applies ? "totally real algebraic integer, degree >= 2: holds"
                                 : "totally real algebraic integer of degree >= 2: fails";
        r.concrete = true;
        if (r.applies) {
            Rational v = Rational(degree) / Rational(degree - 1) * (n + 1);
            r.exact = v;
            r.value = v.get_d();
            r.note = "deg(lambda) = " + std::to_string(degree);
        }
        rows.push_back(std::move(r));
    }

    {
        BoundRow r;
        r.name = "high-lambda";
        bool applies = lam.compare(Rational(2)) >= 0;
        r.hypothesis = applies ? "lambda >= 2: holds" : "lambda >= 2: fails";
        r.applies = applies;
        r.concrete = false;  // o(1) suppressed
        if (applies) {
            if (lam.is_rational()) {
                Rational l = lam.rational_value();
                Rational coeff = 1 + Rational(1, 4) + 1 / (l * l);
                r.exact = coeff;
                r.value = coeff.get_d();
            } else {
                long double l = lam.to_long_double();
                r.value = static_cast<double>(1 + 0.25L + 1 / (l * l));
            }
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

long long lower_bound_count(int n, const OrderResult& k) {
    if (n < 1) throw std::invalid_argument("lower_bound_count: n >= 1");
    if (!k.finite()) return n;
    if (k.k < 2) throw std::invalid_argument("lower_bound_count: k >= 2");
    return static_cast<long long>((n - 1) / (k.k - 1)) * k.k;
}

LowerBoundWitness lower_bound_count_materialized(const AlgebraicReal& alpha, int n,
                                                 const OrderResult& k) {
    LowerBoundWitness w;
    w.count = lower_bound_count(n, k);
    if (!k.finite()) {
        SphericalCode code = simplex_like_code(alpha, n);
        CodeAudit audit = audit_code(code);
        w.materialized = true;
        w.audit_pass = audit.pass() && code.size() == w.count;
        w.detail = "simplex-like code, size " + std::to_string(code.size());
        return w;
    }
    if (!k.witness) {
        w.detail = "no witness graph supplied";
        return w;
    }
    AlgebraicReal lam = lam_of_alpha(alpha);
    SphericalCode code0 = code_from_graph(*k.witness, lam);
    if (n < code0.dim + 1) {
        w.detail = "dimension too small to lift";
        return w;
    }
    SphericalCode lifted = kronecker_lift(code0, alpha, n);
    CodeAudit audit = audit_code(lifted);
    w.materialized = true;
    w.audit_pass = audit.pass() && lifted.size() == w.count;
    w.detail = "kronecker lift of the order-" + std::to_string(k.k) +
               " witness: size " + std::to_string(lifted.size());
    return w;
}

int choose_t(const std::vector<Graph>& members, const AlgebraicReal& alpha) {
    AlgebraicReal lam = lam_of_alpha(alpha);
    // Base requirement: t > lambda^2 + 1, i.e. sqrt(t-1) > lambda.
    int t = 2;
    while (true) {
        AlgebraicReal s = AlgebraicReal::from_rational(Rational(t - 1)).sqrt();
        if (lam.compare(s) < 0) break;
        ++t;
        if (t > 1 << 20) throw std::runtime_error("choose_t: runaway base requirement");
    }
    auto satisfied = [&](int tt) {
        for (const Graph& g : members) {
            // Conservative: use a certified lower bound for lambda1(G0).
            SpectralBracket b = spectral_radius(g, Rational(1, BigInt(1) << 40));
            if (alpha.is_rational()) {
                Rational a = alpha.rational_value();
                Rational l = lam_of_alpha(a);
                Rational lhs = 1 - b.lo / l + Rational(g.order()) / (tt + 1 / a - 1);
                if (!(lhs < 0)) return false;
            } else {
                long double a = alpha.to_long_double();
                long double l = (1 - a) / (2 * a);
                long double lo = static_cast<long double>(b.lo.get_d());
                long double lhs = 1 - lo / l + static_cast<long double>(g.order()) /
                                                   (tt + 1 / a - 1);
                if (!(lhs < -1e-12)) return false;
            }
        }
        return true;
    };
    while (!satisfied(t)) {
        ++t;
        if (t > 1 << 24) throw std::runtime_error("choose_t: no admissible t found");
    }
    return t;
}

UpperBoundParams upper_bound_parameters(const AlgebraicReal& alpha, double eps) {
    if (eps <= 0) throw std::invalid_argument("upper_bound_parameters: eps > 0");
    UpperBoundParams p;
    AlgebraicReal lam = lam_of_alpha(alpha);
    if (lam.compare(Rational(2)) < 0)
        throw std::invalid_argument("upper_bound_parameters: requires lambda >= 2");
    double target = 2 / std::sqrt(1 + 4 * eps);
    int k = 1;
    while (2 * std::cos(M_PI / (k + 2)) <= target) ++k;
    p.k = k;
    p.lambda_prime = 2 * std::cos(M_PI / (k + 2));
    long double l = lam.to_long_double();
    p.d = static_cast<double>((l / p.lambda_prime) * (l / p.lambda_prime) + 1);
    // Smallest D with sqrt(D) > lambda, certified exactly.
    int D = 1;
    while (true) {
        AlgebraicReal sd = AlgebraicReal::from_int(D).sqrt();
        if (lam.compare(sd) < 0) break;
        ++D;
        if (D > 1 << 20) throw std::runtime_error("upper_bound_parameters: runaway D");
    }
    p.D = D;
    int t = 2;
    while (true) {
        AlgebraicReal s = AlgebraicReal::from_rational(Rational(t - 1)).sqrt();
        if (lam.compare(s) < 0) break;
        ++t;
    }
    p.t_min = t;
    return p;
}

std::string bounds_to_json(const AlgebraicReal& alpha, int n,
                           const std::vector<BoundRow>& rows) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    nlohmann::ordered_json a;
    std::vector<std::string> coeffs;
    for (const auto& c : alpha.minpoly().coeffs()) coeffs.push_back(c.get_str());
    a["minpoly"] = coeffs;
    a["value"] = alpha.to_double();
    j["alpha"] = a;
    j["n"] = n;
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (const BoundRow& r : rows) {
        nlohmann::ordered_json row;
        row["name"] = r.name;
        row["hypothesis"] = r.hypothesis;
        row["applies"] = r.applies;
        row["concrete"] = r.concrete;
        if (r.applies) {
            row["value"] = r.value;
            if (r.exact) row["exact"] = r.exact->get_str();
        }
        if (!r.note.empty()) row["note"] = r.note;
        table.push_back(row);
    }
    j["bounds"] = table;
    return j.dump(2);
}

}  // namespace eqlines
