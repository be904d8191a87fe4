#include "eqlines/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace eqlines {

namespace {

Rational pow2_inv(int k) {
    BigInt d = 1;
    d <<= k;
    return Rational(1) / Rational(d);
}

}  // namespace

std::shared_ptr<const AlgebraicReal::SfData> AlgebraicReal::make_sf_data(const IntPoly& p) {
    auto d = std::make_shared<SfData>();
    d->poly = squarefree_part(p);
    d->chain = sturm_chain(d->poly);
    return d;
}

AlgebraicReal::AlgebraicReal(IntPoly poly, Rational lo, Rational hi, Irreducibility irr)
    : poly_(std::move(poly)), sf_(make_sf_data(poly_)), lo_(std::move(lo)),
      hi_(std::move(hi)), irr_(irr) {
    validate();
}

void AlgebraicReal::validate() const {
    if (poly_.degree() < 1)
        throw std::invalid_argument("AlgebraicReal: polynomial must be nonconstant");
    if (!(lo_ < hi_)) throw std::invalid_argument("AlgebraicReal: need lo < hi");
    if (sf().sign_at(lo_) == 0 || sf().sign_at(hi_) == 0)
        throw std::invalid_argument(
            "AlgebraicReal: interval endpoint is a root; shrink the interval");
    if (count_roots(chain(), lo_, hi_) != 1)
        throw std::invalid_argument("AlgebraicReal: interval does not isolate one root");
    // Degree-1 polynomial pins an exact rational value.
    if (sf().degree() == 1)
        exact_ = Rational(-sf()[0]) / Rational(sf()[1]);
}

AlgebraicReal AlgebraicReal::from_rational(const Rational& r) {
    std::vector<BigInt> c{-r.get_num(), r.get_den()};
    IntPoly p{std::move(c)};
    AlgebraicReal a(p, r - 1, r + 1, Irreducibility::Proven);
    a.exact_ = r;
    return a;
}

const Rational& AlgebraicReal::rational_value() const {
    if (!exact_) throw std::logic_error("rational_value: not an exact rational");
    return *exact_;
}

void AlgebraicReal::refine_to(const Rational& w) const {
    if (exact_) {
        // Keep the interval centered on the exact value while preserving
        // isolation (the value is the unique root of sf in any small box).
        Rational half = w / 2;
        while (hi_ - lo_ > w) {
            Rational nlo = *exact_ - half, nhi = *exact_ + half;
            if (sf().sign_at(nlo) != 0 && sf().sign_at(nhi) != 0 &&
                count_roots(chain(), nlo, nhi) == 1) {
                lo_ = nlo;
                hi_ = nhi;
                return;
            }
            half /= 2;
        }
        return;
    }
    int slo = sf().sign_at(lo_);
    while (hi_ - lo_ > w) {
        Rational mid = (lo_ + hi_) / 2;
        int smid = sf().sign_at(mid);
        if (smid == 0) {
            exact_ = mid;
            refine_to(w);
            return;
        }
        if (smid == slo)
            lo_ = mid;
        else
            hi_ = mid;
    }
}

double AlgebraicReal::to_double() const {
    if (exact_) return exact_->get_d();
    refine_to(pow2_inv(60));
    Rational mid = (lo_ + hi_) / 2;
    return mid.get_d();
}

long double AlgebraicReal::to_long_double() const {
    refine_to(pow2_inv(120));
    Rational mid = exact_ ? *exact_ : (lo_ + hi_) / 2;
    // Double + correction term gives ~106 accurate bits.
    double d1 = mid.get_d();
    Rational rem = mid - Rational(d1);
    return static_cast<long double>(d1) + static_cast<long double>(rem.get_d());
}

int AlgebraicReal::sign() const { return compare(Rational(0)); }

int AlgebraicReal::compare(const Rational& r) const {
    if (exact_) return cmp(*exact_, r) < 0 ? -1 : (cmp(*exact_, r) > 0 ? 1 : 0);
    if (r <= lo_) return 1;   // value in (lo, hi)
    if (r >= hi_) return -1;
    int sr = sf().sign_at(r);
    if (sr == 0) {
        exact_ = r;
        return 0;
    }
    // Root lies left of r iff the sign flips on (lo, r).
    return (sf().sign_at(lo_) != sr) ? -1 : 1;
}

int AlgebraicReal::compare(const AlgebraicReal& o) const {
    if (exact_) return -o.compare(*exact_);
    if (o.exact_) return compare(*o.exact_);
    if (hi_ <= o.lo_) return -1;
    if (o.hi_ <= lo_) return 1;
    // Overlapping intervals: equality can only happen at a common root of
    // the two squarefree polynomials.
    IntPoly g = poly_gcd(sf(), o.sf());
    std::vector<IntPoly> gchain;
    if (g.degree() >= 1) gchain = sturm_chain(g);
    for (;;) {
        if (hi_ <= o.lo_) return -1;
        if (o.hi_ <= lo_) return 1;
        if (g.degree() >= 1) {
            Rational ulo = std::min(lo_, o.lo_), uhi = std::max(hi_, o.hi_);
            // Endpoints are never roots of g since g divides both sf polys.
            if (count_roots(gchain, ulo, uhi) == 1 &&
                count_roots(gchain, lo_, hi_) == 1 &&
                count_roots(gchain, o.lo_, o.hi_) == 1)
                return 0;  // both values equal the unique common root
        }
        Rational w = std::min(hi_ - lo_, o.hi_ - o.lo_) / 2;
        refine_to(w);
        o.refine_to(w);
        if (exact_ || o.exact_) return compare(o);
    }
}

AlgebraicReal AlgebraicReal::plus_rational(const Rational& r) const {
    if (exact_) return from_rational(*exact_ + r);
    AlgebraicReal out(poly_.shifted(r), lo_ + r, hi_ + r, irr_);
    return out;
}

AlgebraicReal AlgebraicReal::times_rational(const Rational& s) const {
    if (s == 0) throw std::invalid_argument("times_rational: zero scale");
    if (exact_) return from_rational(*exact_ * s);
    Rational nlo = lo_ * s, nhi = hi_ * s;
    if (s < 0) std::swap(nlo, nhi);
    return AlgebraicReal(poly_.root_scaled(s), nlo, nhi, irr_);
}

AlgebraicReal AlgebraicReal::inverse() const {
    if (exact_) {
        if (*exact_ == 0) throw std::domain_error("inverse: value is zero");
        return from_rational(1 / *exact_);
    }
    // Make the interval sign-definite.
    while (lo_ < 0 && hi_ > 0) {
        refine_to((hi_ - lo_) / 4);
        if (exact_) return inverse();
    }
    if (lo_ == 0 || hi_ == 0) {
        refine_to((hi_ - lo_) / 4);
        if (exact_) return inverse();
    }
    IntPoly p = poly_;
    // Strip roots at zero so the reversal is defined.
    std::vector<BigInt> c = p.coeffs();
    size_t k = 0;
    while (k < c.size() && c[k] == 0) ++k;
    if (k > 0) p = IntPoly(std::vector<BigInt>(c.begin() + k, c.end()));
    Rational nlo = 1 / hi_, nhi = 1 / lo_;
    if (nlo > nhi) std::swap(nlo, nhi);
    return AlgebraicReal(p.reversed(), nlo, nhi, irr_);
}

AlgebraicReal AlgebraicReal::sqrt() const {
    if (compare(Rational(0)) < 0) throw std::domain_error("sqrt: negative value");
    if (exact_) {
        const Rational& r = *exact_;
        BigInt num = r.get_num(), den = r.get_den();
        if (mpz_perfect_square_p(num.get_mpz_t()) &&
            mpz_perfect_square_p(den.get_mpz_t())) {
            BigInt sn, sd;
            mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
            mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
            return from_rational(Rational(sn) / Rational(sd));
        }
    }
    IntPoly q = poly_.compose_square();
    // Pick the isolated positive root of q whose square is this value.
    auto roots = isolate_real_roots(q);
    IntPoly qsf = squarefree_part(q);
    for (auto& [a, b] : roots) {
        if (b <= 0) continue;
        Rational aa = std::max(a, Rational(0));
        // Narrow until the squared interval pins down at most one root of
        // our polynomial. sign-based bisection on qsf.
        for (;;) {
            if (qsf.sign_at(aa) == 0) {
                // Rational square root.
                if (compare(aa * aa) == 0) return from_rational(aa);
                break;
            }
            Rational sq_lo = aa * aa, sq_hi = b * b;
            if (sq_hi <= sq_lo) break;
            if (sf().sign_at(sq_lo) != 0 && sf().sign_at(sq_hi) != 0 &&
                count_roots(chain(), sq_lo, sq_hi) <= 1) {
                int clo = compare(sq_lo), chi = compare(sq_hi);
                if (clo > 0 && chi < 0) return AlgebraicReal(q, aa, b, Irreducibility::Unknown);
                break;  // this root's square is a different root of poly_
            }
            Rational mid = (aa + b) / 2;
            int sm = qsf.sign_at(mid);
            if (sm == 0) {
                if (compare(mid * mid) == 0) return from_rational(mid);
                break;
            }
            if (sm == qsf.sign_at(aa))
                aa = mid;
            else
                b = mid;
        }
    }
    throw std::logic_error("sqrt: no candidate root matched");
}

bool AlgebraicReal::monic_up_to_sign() const {
    return abs(poly_.lc()) == 1;
}

bool AlgebraicReal::is_root_of(const IntPoly& f) const {
    if (f.is_zero()) return true;
    if (exact_) return f.sign_at(*exact_) == 0;
    IntPoly h = poly_gcd(sf(), f);
    if (h.degree() < 1) return false;
    // Any root of h in the isolating interval must be this number, since h
    // divides the squarefree polynomial the interval isolates against.
    return count_roots(h, lo_, hi_) >= 1;
}

std::string AlgebraicReal::describe() const {
    std::ostringstream os;
    os << poly_.to_string() << " @ (" << lo_.get_str() << ", " << hi_.get_str() << ")";
    return os.str();
}

// ---- reduction / factor scan ----

namespace {

// Try to factor a primitive squarefree integer polynomial using its
// numerically computed roots: candidate factors come from root subsets,
// verified by exact division. Conclusive for monic inputs of degree <= 8
// and for arbitrary quadratics.
struct FactorScan {
    bool conclusive = false;
    std::vector<IntPoly> factors;  // nontrivial factorization if found
};

FactorScan factor_scan(const IntPoly& p);

FactorScan scan_monic_subsets(const IntPoly& p) {
    FactorScan out;
    int d = p.degree();
    ConjugateSet cs = complex_roots(p);
    std::vector<std::complex<double>> roots = cs.roots;
    // Enumerate root subsets of size 1..d/2; candidate = prod (x - r).
    for (int size = 1; size <= d / 2; ++size) {
        std::vector<int> idx(size);
        std::function<bool(int, int)> rec = [&](int pos, int start) -> bool {
            if (pos == size) {
                std::vector<std::complex<double>> cf{1.0};
                for (int i : idx) {
                    std::vector<std::complex<double>> next(cf.size() + 1, 0.0);
                    for (size_t k = 0; k < cf.size(); ++k) {
                        next[k + 1] += cf[k];
                        next[k] -= cf[k] * roots[i];
                    }
                    cf = std::move(next);
                }
                std::vector<BigInt> ic(cf.size());
                for (size_t k = 0; k < cf.size(); ++k) {
                    double re = cf[k].real();
                    double rd = std::round(re);
                    if (std::abs(cf[k].imag()) > 1e-4 || std::abs(re - rd) > 1e-4)
                        return false;
                    ic[k] = BigInt(static_cast<long>(rd));
                }
                IntPoly cand{std::move(ic)};
                if (cand.degree() != size) return false;
                IntPoly quot;
                if (divides(p, cand, &quot)) {
                    out.factors = {cand, quot};
                    return true;
                }
                return false;
            }
            for (int i = start; i < d; ++i) {
                idx[pos] = i;
                if (rec(pos + 1, i + 1)) return true;
            }
            return false;
        };
        if (rec(0, 0)) break;
    }
    out.conclusive = true;  // subset scan is exhaustive for monic inputs
    return out;
}

FactorScan factor_scan(const IntPoly& p) {
    FactorScan out;
    int d = p.degree();
    if (d <= 1) {
        out.conclusive = true;
        return out;
    }
    if (d == 2) {
        // Quadratic: rational roots iff the discriminant is a perfect square.
        BigInt a = p[2], b = p[1], c = p[0];
        BigInt disc = b * b - 4 * a * c;
        out.conclusive = true;
        if (disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t())) {
            BigInt s;
            mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
            // roots (-b +- s) / (2a)
            for (int sign : {1, -1}) {
                Rational r = Rational(-b + sign * s) / Rational(2 * a);
                std::vector<BigInt> lin{-r.get_num(), r.get_den()};
                IntPoly f{std::move(lin)};
                IntPoly quot;
                if (divides(p, f, &quot)) {
                    out.factors = {f, quot};
                    break;
                }
            }
        }
        return out;
    }
    if (abs(p.lc()) == 1 && d <= 8) return scan_monic_subsets(p);
    return out;  // inconclusive
}

}  // namespace

void AlgebraicReal::reduce() {
    IntPoly cur = sf().primitive();
    bool proven = true;
    for (;;) {
        FactorScan scan = factor_scan(cur);
        if (!scan.conclusive) proven = false;
        if (scan.factors.empty()) break;
        // Keep the factor with our root inside the isolating interval.
        bool found = false;
        for (const IntPoly& f : scan.factors) {
            if (f.degree() < 1) continue;
            if (exact_) {
                if (f.sign_at(*exact_) == 0) {
                    cur = f.primitive();
                    found = true;
                    break;
                }
                continue;
            }
            if (f.sign_at(lo_) != 0 && f.sign_at(hi_) != 0 &&
                count_roots(f, lo_, hi_) == 1) {
                cur = f.primitive();
                found = true;
                break;
            }
        }
        if (!found) {
            // Interval straddles roots of several factors: refine and retry.
            refine_to((hi_ - lo_) / 4);
            continue;
        }
        if (cur.degree() == 1) break;
    }
    if (cur.lc() < 0) cur = -cur;
    poly_ = cur;
    sf_ = make_sf_data(poly_);
    irr_ = proven ? Irreducibility::Proven : Irreducibility::Unknown;
    if (sf().degree() == 1 && !exact_)
        exact_ = Rational(-sf()[0]) / Rational(sf()[1]);
}

// ---- constants ----

AlgebraicReal beta_constant(int m) {
    if (m < 1) throw std::invalid_argument("beta_constant: m >= 1 required");
    if (m == 1) return AlgebraicReal::from_rational(1);
    std::vector<BigInt> c(m + 2, BigInt(0));
    for (int i = 0; i <= m - 1; ++i) c[i] = -1;
    c[m + 1] = 1;
    IntPoly p{std::move(c)};
    AlgebraicReal b(p, Rational(1), Rational(2));
    return b;
}

AlgebraicReal alpha_constant(int m) {
    if (m < 1) throw std::invalid_argument("alpha_constant: m >= 1 required");
    if (m == 1) return AlgebraicReal::from_rational(2);
    // p(z) = z^{m+1} - (1 + z + ... + z^{m-1});  alpha^2 = beta + 2 + 1/beta.
    // Reduce z^k modulo z^2 - (u-2) z + 1 to get p = a(u) z + b(u); the
    // resultant is (2-u) a b - a^2 - b^2, whose roots are z_i + 2 + 1/z_i.
    std::vector<BigInt> pc(m + 2, BigInt(0));
    for (int i = 0; i <= m - 1; ++i) pc[i] = -1;
    pc[m + 1] = 1;
    IntPoly umin2{std::vector<BigInt>{-2, 1}};  // u - 2
    IntPoly A = IntPoly{}, B = IntPoly::constant(1);  // z^0 = 0*z + 1
    IntPoly a, b;
    for (int k = 0; k <= m + 1; ++k) {
        if (pc[k] != 0) {
            a = a + A.scaled(pc[k]);
            b = b + B.scaled(pc[k]);
        }
        IntPoly nextA = A * umin2 + B;
        IntPoly nextB = -A;
        A = std::move(nextA);
        B = std::move(nextB);
    }
    IntPoly two_minus_u{std::vector<BigInt>{2, -1}};
    IntPoly s = two_minus_u * a * b - a * a - b * b;
    if (s.lc() < 0) s = -s;
    IntPoly q = s.compose_square();
    // For odd m, beta = -1 contributes the root 0 twice; alpha is nonzero.
    {
        std::vector<BigInt> qc = q.coeffs();
        size_t nz = 0;
        while (nz < qc.size() && qc[nz] == 0) ++nz;
        if (nz > 0) q = IntPoly(std::vector<BigInt>(qc.begin() + nz, qc.end()));
    }

    // alpha_m is the largest real root of q; isolate it around the numeric
    // value of beta^{1/2} + beta^{-1/2}.
    AlgebraicReal beta = beta_constant(m);
    beta.refine_to(Rational(1, 1'000'000'000));
    double bd = beta.to_double();
    double approx = std::sqrt(bd) + 1 / std::sqrt(bd);
    auto roots = isolate_real_roots(q);
    for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
        auto [lo, hi] = *it;
        AlgebraicReal cand(q, lo, hi);
        cand.refine_to(Rational(1, 1'000'000));
        double cd = cand.to_double();
        if (std::abs(cd - approx) < 1e-4) {
            cand.reduce();
            return cand;
        }
    }
    throw std::logic_error("alpha_constant: numeric anchor failed");
}

AlgebraicReal lambda_star() {
    IntPoly p{std::vector<BigInt>{-1, 0, -4, 0, 1}};
    AlgebraicReal l(p, Rational(2), Rational(21, 10), Irreducibility::Unknown);
    l.reduce();
    return l;
}

// ---- complex roots (Aberth) ----

namespace {

std::vector<std::complex<double>> aberth_roots(const IntPoly& p) {
    int d = p.degree();
    std::vector<std::complex<double>> c(d + 1);
    double lead = p.lc().get_d();
    for (int i = 0; i <= d; ++i) {
        c[i] = p[i].get_d() / lead;
        if (!std::isfinite(c[i].real()))
            throw std::runtime_error("complex_roots: coefficients overflow double");
    }
    auto eval = [&](std::complex<double> z, std::complex<double>* deriv) {
        std::complex<double> v = 0, dv = 0;
        for (int i = d; i >= 0; --i) {
            dv = dv * z + v;
            v = v * z + c[i];
        }
        if (deriv) *deriv = dv;
        return v;
    };
    double radius = 0;
    for (int i = 0; i < d; ++i) radius = std::max(radius, std::abs(c[i]));
    radius = 1 + radius;
    std::vector<std::complex<double>> z(d);
    for (int j = 0; j < d; ++j) {
        double ang = 2 * M_PI * (j + 0.25) / d + 0.3;
        z[j] = 0.7 * radius * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    for (int iter = 0; iter < 400; ++iter) {
        double worst = 0;
        for (int j = 0; j < d; ++j) {
            std::complex<double> dv;
            std::complex<double> v = eval(z[j], &dv);
            if (std::abs(v) == 0) continue;
            std::complex<double> w = (dv != std::complex<double>(0)) ? v / dv : v;
            std::complex<double> sum = 0;
            for (int k = 0; k < d; ++k)
                if (k != j) sum += 1.0 / (z[j] - z[k]);
            std::complex<double> corr = w / (1.0 - w * sum);
            z[j] -= corr;
            worst = std::max(worst, std::abs(corr) / (1 + std::abs(z[j])));
        }
        if (worst < 1e-15) break;
    }
    // Newton polish.
    for (int j = 0; j < d; ++j) {
        for (int t = 0; t < 3; ++t) {
            std::complex<double> dv;
            std::complex<double> v = eval(z[j], &dv);
            if (std::abs(dv) > 0) z[j] -= v / dv;
        }
    }
    return z;
}

}  // namespace

ConjugateSet complex_roots(const IntPoly& p) {
    if (p.degree() < 1)
        throw std::invalid_argument("complex_roots: degree >= 1 required");
    ConjugateSet out;
    out.source = p;
    // Split into squarefree layers: g_k = gcd(g_{k-1}, g_{k-1}'); the part
    // with multiplicity exactly k is (g_{k-1}/g_k) / (g_k/g_{k+1}).
    std::vector<IntPoly> g{p.primitive()};
    while (g.back().degree() >= 1)
        g.push_back(poly_gcd(g.back(), g.back().derivative()));
    std::vector<IntPoly> u;  // u[k] = product of factors with multiplicity > k
    for (size_t i = 0; i + 1 < g.size(); ++i) {
        IntPoly q;
        if (!divides(g[i], g[i + 1], &q))
            throw std::logic_error("complex_roots: gcd chain division failed");
        u.push_back(q);
    }
    double pnorm = 0;
    for (const auto& coeff : p.coeffs()) pnorm = std::max(pnorm, std::abs(coeff.get_d()));
    for (size_t k = 0; k < u.size(); ++k) {
        IntPoly exactly_k = u[k];
        if (k + 1 < u.size()) {
            IntPoly q;
            if (!divides(u[k], u[k + 1], &q))
                throw std::logic_error("complex_roots: multiplicity split failed");
            exactly_k = q;
        }
        if (exactly_k.degree() < 1) continue;
        auto roots = aberth_roots(exactly_k);
        for (auto z : roots) {
            double resid = 0;
            {
                std::complex<double> v = 0;
                for (int i = p.degree(); i >= 0; --i) v = v * z + p[i].get_d();
                resid = std::abs(v);
            }
            out.max_residual = std::max(out.max_residual, resid);
            for (size_t rep = 0; rep <= k; ++rep) out.roots.push_back(z);
        }
    }
    if (out.max_residual > 1e-8 * std::max(1.0, pnorm)) {
        std::ostringstream os;
        os << "complex_roots: residual " << out.max_residual
           << " exceeds tolerance for " << p.to_string();
        throw std::runtime_error(os.str());
    }
    // Vieta cross-check: sum and product of all roots with multiplicity.
    {
        int d = p.degree();
        std::complex<double> sum = 0, prod = 1;
        for (auto z : out.roots) {
            sum += z;
            prod *= z;
        }
        double lc = p.lc().get_d();
        std::complex<double> want_sum = d >= 1 ? -p[d - 1].get_d() / lc : 0.0;
        std::complex<double> want_prod =
            (d % 2 == 0 ? 1.0 : -1.0) * p[0].get_d() / lc;
        double scale = 1 + std::abs(want_sum) + std::abs(want_prod);
        if (std::abs(sum - want_sum) > 1e-8 * scale ||
            std::abs(prod - want_prod) > 1e-8 * scale)
            throw std::runtime_error("complex_roots: Vieta check failed for " +
                                     p.to_string());
    }
    return out;
}

bool is_totally_real(const AlgebraicReal& lam, double tol) {
    ConjugateSet cs = complex_roots(lam.minpoly());
    for (auto z : cs.roots)
        if (std::abs(z.imag()) > tol) return false;
    return true;
}

LambdaClass classify_lambda(const AlgebraicReal& lam) {
    ConjugateSet cs = complex_roots(lam.minpoly());
    for (auto z : cs.roots)
        if (std::abs(z.imag()) > 1e-8) return LambdaClass::NotTotallyReal;
    lam.refine_to(pow2_inv(40));
    double v = lam.to_double();
    for (auto z : cs.roots)
        if (z.real() > v + 1e-8) return LambdaClass::TotallyRealNotMax;
    return LambdaClass::TotallyRealMax;
}

const char* to_string(LambdaClass c) {
    switch (c) {
        case LambdaClass::NotTotallyReal: return "NOT_TOTALLY_REAL";
        case LambdaClass::TotallyRealNotMax: return "TOTALLY_REAL_NOT_MAX";
        case LambdaClass::TotallyRealMax: return "TOTALLY_REAL_MAX";
    }
    return "?";
}

AlphaAuditReport alpha_conjugate_audit(int m) {
    if (m < 2) throw std::invalid_argument("alpha_conjugate_audit: m >= 2");
    AlphaAuditReport rep;
    rep.m = m;
    std::vector<BigInt> pc(m + 2, BigInt(0));
    for (int i = 0; i <= m - 1; ++i) pc[i] = -1;
    pc[m + 1] = 1;
    IntPoly p{std::move(pc)};
    ConjugateSet betas = complex_roots(p);

    AlgebraicReal alpha = alpha_constant(m);
    alpha.refine_to(Rational(1, 1'000'000'000));
    double alpha_num = alpha.to_double();

    for (auto beta : betas.roots) {
        std::complex<double> gamma = std::sqrt(beta);
        std::complex<double> cand = gamma + 1.0 / gamma;
        rep.candidates.push_back(cand);
        rep.candidates.push_back(-cand);
    }
    bool extras = false;
    for (auto cand : rep.candidates) {
        if (std::abs(cand.imag()) <= 1e-8) {
            if (std::abs(cand.real()) <= 1e-8) {
                ++rep.zero_candidates;  // beta = -1 case; not a conjugate
                continue;
            }
            rep.real_candidates.push_back(cand.real());
            if (std::abs(std::abs(cand.real()) - alpha_num) > 1e-6) extras = true;
        }
    }
    bool has_plus = false, has_minus = false;
    for (double r : rep.real_candidates) {
        if (std::abs(r - alpha_num) <= 1e-6) has_plus = true;
        if (std::abs(r + alpha_num) <= 1e-6) has_minus = true;
    }
    rep.only_pm_alpha = !extras && has_plus && has_minus;

    // Rational-transform product: q(x) = prod (x - cand) over all candidates
    // must have near-integer coefficients.
    std::vector<std::complex<double>> cf{1.0};
    for (auto cand : rep.candidates) {
        std::vector<std::complex<double>> next(cf.size() + 1, 0.0);
        for (size_t k = 0; k < cf.size(); ++k) {
            next[k + 1] += cf[k];
            next[k] -= cf[k] * cand;
        }
        cf = std::move(next);
    }
    rep.max_round_distance = 0;
    for (auto v : cf) {
        double rd = std::round(v.real());
        rep.max_round_distance =
            std::max(rep.max_round_distance,
                     std::max(std::abs(v.real() - rd), std::abs(v.imag())));
        rep.product_coeffs.push_back(static_cast<long long>(rd));
    }
    rep.near_integer_ok = rep.max_round_distance <= 1e-6;
    return rep;
}

}  // namespace eqlines
