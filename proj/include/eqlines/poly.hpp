#ifndef EQLINES_POLY_HPP
#define EQLINES_POLY_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace eqlines {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial over the integers, coefficients ascending
/// (coeffs[i] is the x^i coefficient). Zero polynomial has no coefficients.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPoly constant(BigInt v);
    static IntPoly monomial(int deg, BigInt coeff = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const BigInt& operator[](int i) const { return c_[i]; }
    const std::vector<BigInt>& coeffs() const { return c_; }
    const BigInt& lc() const { return c_.back(); }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    IntPoly scaled(const BigInt& s) const;

    BigInt eval_z(const BigInt& x) const;
    Rational eval_q(const Rational& x) const;
    double eval_d(double x) const;
    /// Exact sign of the value at a rational point.
    int sign_at(const Rational& x) const;

    IntPoly derivative() const;

    /// Largest positive integer dividing all coefficients (0 for zero poly).
    BigInt content() const;
    /// Divide out the content; sign of the leading coefficient is kept.
    IntPoly primitive() const;

    /// p(x^2): roots are the square roots of this polynomial's roots.
    IntPoly compose_square() const;
    /// Integer-cleared p(x - r): roots shifted by rational r.
    IntPoly shifted(const Rational& r) const;
    /// Integer-cleared s^deg * p(x/s): roots multiplied by rational s.
    IntPoly root_scaled(const Rational& s) const;
    /// x^deg * p(1/x): roots inverted (requires nonzero constant term).
    IntPoly reversed() const;

    /// Cauchy-style bound: every complex root has |z| <= bound.
    Rational root_bound() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<BigInt> c_;
};

/// Rational-coefficient division: a = q*b + r with deg r < deg b.
void divmod_q(const IntPoly& a, const IntPoly& b, std::vector<Rational>* quot,
              std::vector<Rational>* rem);

/// True iff b divides a over the rationals; on success *quot gets the
/// quotient as a primitive integer polynomial (equal to the rational
/// quotient up to a positive constant).
bool divides(const IntPoly& a, const IntPoly& b, IntPoly* quot = nullptr);

/// Primitive gcd with positive leading coefficient (gcd over Q, cleared).
IntPoly poly_gcd(IntPoly a, IntPoly b);

/// p / gcd(p, p'), primitive: same distinct roots, all simple.
IntPoly squarefree_part(const IntPoly& p);

/// Sturm chain of p (which should be squarefree for exact root counts).
std::vector<IntPoly> sturm_chain(const IntPoly& p);

/// Number of distinct real roots of p in the open interval (lo, hi).
/// Requires p(lo) != 0 and p(hi) != 0.
int count_roots(const IntPoly& p, const Rational& lo, const Rational& hi);
int count_roots(const std::vector<IntPoly>& chain, const Rational& lo,
                const Rational& hi);

/// Isolating intervals (lo, hi) for every distinct real root, ascending.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const IntPoly& p);

}  // namespace eqlines

#endif
