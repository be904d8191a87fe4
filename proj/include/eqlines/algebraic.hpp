#ifndef EQLINES_ALGEBRAIC_HPP
#define EQLINES_ALGEBRAIC_HPP

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eqlines/poly.hpp"

namespace eqlines {

enum class Irreducibility { Proven, Unknown };

/// Real algebraic number: integer polynomial plus an isolating rational
/// interval (lo, hi) certified by Sturm count to contain exactly one root.
/// The polynomial need not be irreducible; all decisions remain exact.
class AlgebraicReal {
public:
    AlgebraicReal(IntPoly poly, Rational lo, Rational hi,
                  Irreducibility irr = Irreducibility::Unknown);

    static AlgebraicReal from_rational(const Rational& r);
    static AlgebraicReal from_int(long v) { return from_rational(Rational(v)); }

    const IntPoly& minpoly() const { return poly_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Irreducibility irreducibility() const { return irr_; }

    bool is_rational() const { return exact_.has_value(); }
    const Rational& rational_value() const;

    /// Shrink the isolating interval to width <= w (exact bisection).
    void refine_to(const Rational& w) const;

    double to_double() const;
    long double to_long_double() const;

    /// Exact trichotomy. -1: *this < o, 0: equal, 1: greater.
    int compare(const AlgebraicReal& o) const;
    int compare(const Rational& r) const;
    bool operator<(const AlgebraicReal& o) const { return compare(o) < 0; }
    bool operator==(const AlgebraicReal& o) const { return compare(o) == 0; }

    int sign() const;

    AlgebraicReal plus_rational(const Rational& r) const;
    AlgebraicReal times_rational(const Rational& s) const;
    AlgebraicReal inverse() const;
    AlgebraicReal sqrt() const;

    /// Try to replace the polynomial by its factor vanishing here; proves
    /// irreducibility when the scan is conclusive (degree <= 8 or quadratics).
    void reduce();

    /// True iff the stored polynomial is monic up to sign. With a reduced
    /// (irreducible) polynomial this decides algebraic integrality.
    bool monic_up_to_sign() const;

    /// Exact test: is this number a root of f?
    bool is_root_of(const IntPoly& f) const;

    std::string describe() const;

private:
    struct SfData {
        IntPoly poly;
        std::vector<IntPoly> chain;
    };
    static std::shared_ptr<const SfData> make_sf_data(const IntPoly& p);

    void validate() const;
    const IntPoly& sf() const { return sf_->poly; }
    const std::vector<IntPoly>& chain() const { return sf_->chain; }

    IntPoly poly_;
    std::shared_ptr<const SfData> sf_;
    mutable Rational lo_, hi_;
    mutable std::optional<Rational> exact_;
    Irreducibility irr_ = Irreducibility::Unknown;
};

// ---- Constants from the forbidden-subgraph threshold family ----

/// Largest root of x^{m+1} = 1 + x + ... + x^{m-1} (beta_1 = 1).
AlgebraicReal beta_constant(int m);

/// beta_m^{1/2} + beta_m^{-1/2}; alpha_1 = 2. The annihilating polynomial
/// is built by resultant elimination through the substitution z = gamma^2.
AlgebraicReal alpha_constant(int m);

/// sqrt(2 + sqrt(5)), minimal polynomial x^4 - 4x^2 - 1.
AlgebraicReal lambda_star();

// ---- Conjugates ----

struct ConjugateSet {
    std::vector<std::complex<double>> roots;  // with multiplicity
    IntPoly source;
    double max_residual = 0;  // max |p(root)| over the computed roots
};

/// All complex roots (Aberth iteration on squarefree factors); throws if
/// residuals exceed 1e-8 * max|coeff|.
ConjugateSet complex_roots(const IntPoly& p);

/// Every root of the minimal polynomial has |imag| <= tol.
bool is_totally_real(const AlgebraicReal& lam, double tol = 1e-8);

enum class LambdaClass { NotTotallyReal, TotallyRealNotMax, TotallyRealMax };

LambdaClass classify_lambda(const AlgebraicReal& lam);

const char* to_string(LambdaClass c);

// ---- Conjugate audit for alpha_m ----

struct AlphaAuditReport {
    int m = 0;
    std::vector<std::complex<double>> candidates;  // +-(gamma_i + 1/gamma_i)
    std::vector<double> real_candidates;  // nonzero ones; see zero_candidates
    // For odd m, beta = -1 is a root of p and yields the real candidate 0,
    // which cannot be a conjugate of alpha (it would force alpha = 0).
    int zero_candidates = 0;
    bool only_pm_alpha = false;       // nonzero real candidates are +-alpha_m
    double max_round_distance = 0;    // product-polynomial coefficients vs Z
    std::vector<long long> product_coeffs;  // rounded coefficients
    bool near_integer_ok = false;     // max_round_distance <= 1e-6
    bool pass() const { return only_pm_alpha && near_integer_ok; }
};

AlphaAuditReport alpha_conjugate_audit(int m);

}  // namespace eqlines

#endif
