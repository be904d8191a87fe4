#include "eqlines/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqlines {

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(BigInt v) {
    IntPoly p;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
}

IntPoly IntPoly::monomial(int deg, BigInt coeff) {
    IntPoly p;
    if (coeff != 0) {
        p.c_.assign(deg + 1, BigInt(0));
        p.c_[deg] = std::move(coeff);
    }
    return p;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

IntPoly IntPoly::scaled(const BigInt& s) const {
    if (s == 0) return {};
    IntPoly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

BigInt IntPoly::eval_z(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational IntPoly::eval_q(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double IntPoly::eval_d(double x) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

int IntPoly::sign_at(const Rational& x) const {
    // sum c_i p^i q^(n-i), exact integer sign.
    if (is_zero()) return 0;
    const BigInt& p = x.get_num();
    const BigInt& q = x.get_den();
    BigInt acc = 0;
    BigInt qpow = 1;
    std::vector<BigInt> ppow(c_.size());
    BigInt pw = 1;
    for (size_t i = 0; i < c_.size(); ++i) {
        ppow[i] = pw;
        pw *= p;
    }
    for (size_t k = c_.size(); k-- > 0;) {
        acc += c_[k] * ppow[k] * qpow;
        qpow *= q;
    }
    return sgn(acc);
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigInt> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return IntPoly(std::move(r));
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive() const {
    BigInt g = content();
    if (g == 0 || g == 1) return *this;
    IntPoly r = *this;
    for (auto& x : r.c_) x /= g;
    return r;
}

IntPoly IntPoly::compose_square() const {
    if (is_zero()) return {};
    std::vector<BigInt> r(2 * c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r[2 * i] = c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::shifted(const Rational& r) const {
    // Horner in Q, then clear denominators.
    std::vector<Rational> acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        // acc(x) = acc(x) * (x - r) + coeff
        std::vector<Rational> next(acc.size() + 1, Rational(0));
        for (size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] += acc[i];
            next[i] -= acc[i] * r;
        }
        if (next.empty()) next.assign(1, Rational(0));
        next[0] += Rational(*it);
        acc = std::move(next);
    }
    BigInt den = 1;
    for (const auto& q : acc) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<BigInt> z(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) {
        Rational v = acc[i] * den;
        z[i] = v.get_num();
    }
    return IntPoly(std::move(z)).primitive();
}

IntPoly IntPoly::root_scaled(const Rational& s) const {
    if (s == 0) throw std::invalid_argument("root_scaled: zero scale");
    // Root theta -> theta*s: take p(x/s), clear denominators.
    std::vector<Rational> acc(c_.size());
    Rational spow = 1;
    for (size_t i = 0; i < c_.size(); ++i) {
        acc[i] = Rational(c_[i]) / spow;
        spow *= s;
    }
    BigInt den = 1;
    for (const auto& q : acc) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<BigInt> z(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) z[i] = Rational(acc[i] * den).get_num();
    return IntPoly(std::move(z)).primitive();
}

IntPoly IntPoly::reversed() const {
    if (is_zero() || c_[0] == 0)
        throw std::invalid_argument("reversed: needs nonzero constant term");
    std::vector<BigInt> r(c_.rbegin(), c_.rend());
    return IntPoly(std::move(r));
}

Rational IntPoly::root_bound() const {
    if (degree() < 1) return Rational(0);
    BigInt alc = abs(lc());
    Rational m = 0;
    for (int i = 0; i < degree(); ++i) {
        BigInt ai = abs(c_[i]);
        Rational q(ai);
        q /= Rational(alc);
        if (q > m) m = q;
    }
    return m + 1;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        BigInt a = c_[i];
        if (!out.empty()) {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        } else if (a < 0) {
            out += "-";
            a = -a;
        }
        if (i == 0 || a != 1) out += a.get_str();
        if (i >= 1) {
            if (a != 1) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

void divmod_q(const IntPoly& a, const IntPoly& b, std::vector<Rational>* quot,
              std::vector<Rational>* rem) {
    if (b.is_zero()) throw std::invalid_argument("divmod_q: division by zero poly");
    std::vector<Rational> r(a.coeffs().size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = Rational(a[static_cast<int>(i)]);
    int db = b.degree();
    std::vector<Rational> q(std::max<int>(0, a.degree() - db + 1), Rational(0));
    for (int k = a.degree() - db; k >= 0; --k) {
        Rational f = r[k + db] / Rational(b.lc());
        if (f == 0) continue;
        q[k] = f;
        for (int i = 0; i <= db; ++i) r[k + i] -= f * Rational(b[i]);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (quot) *quot = std::move(q);
    if (rem) *rem = std::move(r);
}

bool divides(const IntPoly& a, const IntPoly& b, IntPoly* quot) {
    std::vector<Rational> q, r;
    divmod_q(a, b, &q, &r);
    if (!r.empty()) return false;
    if (quot) {
        BigInt den = 1;
        for (const auto& x : q)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
        std::vector<BigInt> z(q.size());
        for (size_t i = 0; i < q.size(); ++i) z[i] = Rational(q[i] * den).get_num();
        *quot = IntPoly(std::move(z)).primitive();
    }
    return true;
}

namespace {

// Remainder over Q scaled to a primitive integer polynomial with the SAME
// sign everywhere (scaling factor is a positive rational).
IntPoly signed_primitive_rem(const IntPoly& a, const IntPoly& b) {
    std::vector<Rational> r;
    divmod_q(a, b, nullptr, &r);
    if (r.empty()) return {};
    BigInt den = 1;
    for (const auto& x : r)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<BigInt> z(r.size());
    for (size_t i = 0; i < r.size(); ++i) z[i] = Rational(r[i] * den).get_num();
    IntPoly p{std::move(z)};
    BigInt g = p.content();
    if (g > 1) {
        std::vector<BigInt> w(p.coeffs());
        for (auto& x : w) x /= g;
        p = IntPoly(std::move(w));
    }
    return p;
}

}  // namespace

IntPoly poly_gcd(IntPoly a, IntPoly b) {
    a = a.primitive();
    b = b.primitive();
    while (!b.is_zero()) {
        IntPoly r = signed_primitive_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.lc() < 0) a = -a;
    return a;
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.degree() <= 1) return p.primitive();
    IntPoly g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p.primitive();
    IntPoly q;
    if (!divides(p, g, &q))
        throw std::logic_error("squarefree_part: gcd does not divide");
    return q.primitive();
}

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
    std::vector<IntPoly> chain;
    chain.push_back(p.primitive());
    if (p.degree() < 1) return chain;
    chain.push_back(p.derivative().primitive());
    while (chain.back().degree() >= 0) {
        IntPoly r = signed_primitive_rem(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

namespace {

int sign_variations(const std::vector<IntPoly>& chain, const Rational& x) {
    int v = 0, prev = 0;
    for (const auto& p : chain) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}  // namespace

int count_roots(const std::vector<IntPoly>& chain, const Rational& lo,
                const Rational& hi) {
    if (!(lo < hi)) throw std::invalid_argument("count_roots: need lo < hi");
    if (chain.front().sign_at(lo) == 0 || chain.front().sign_at(hi) == 0)
        throw std::invalid_argument("count_roots: endpoint is a root");
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

int count_roots(const IntPoly& p, const Rational& lo, const Rational& hi) {
    return count_roots(sturm_chain(squarefree_part(p)), lo, hi);
}

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const IntPoly& p) {
    std::vector<std::pair<Rational, Rational>> out;
    IntPoly sf = squarefree_part(p);
    if (sf.degree() < 1) return out;
    auto chain = sturm_chain(sf);
    Rational bound = sf.root_bound();
    Rational lo = -bound, hi = bound;
    // The bound is strict, so the endpoints are never roots.
    struct Seg {
        Rational lo, hi;
        int count;
    };
    int total = count_roots(chain, lo, hi);
    std::vector<Seg> stack;
    if (total > 0) stack.push_back({lo, hi, total});
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.count == 1) {
            out.push_back({s.lo, s.hi});
            continue;
        }
        Rational mid = (s.lo + s.hi) / 2;
        if (sf.sign_at(mid) == 0) {
            // Exact rational root at mid: peel it off with a small isolating
            // interval around it, then recurse on both sides.
            Rational w = (s.hi - s.lo) / 4;
            Rational a = mid - w, b = mid + w;
            while (sf.sign_at(a) == 0) a = (a + mid) / 2;
            while (sf.sign_at(b) == 0) b = (mid + b) / 2;
            while (count_roots(chain, a, b) > 1) {
                Rational na = (a + mid) / 2, nb = (mid + b) / 2;
                a = (sf.sign_at(na) != 0) ? na : (a + na) / 2;
                b = (sf.sign_at(nb) != 0) ? nb : (nb + b) / 2;
            }
            out.push_back({a, b});
            int left = count_roots(chain, s.lo, a);
            int right = count_roots(chain, b, s.hi);
            if (left > 0) stack.push_back({s.lo, a, left});
            if (right > 0) stack.push_back({b, s.hi, right});
        } else {
            int left = count_roots(chain, s.lo, mid);
            int right = s.count - left;
            if (left > 0) stack.push_back({s.lo, mid, left});
            if (right > 0) stack.push_back({mid, s.hi, right});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace eqlines
