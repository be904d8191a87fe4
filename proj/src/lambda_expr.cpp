#include "eqlines/lambda_expr.hpp"

#include <cctype>
#include <stdexcept>

namespace eqlines {

namespace {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& w) : std::runtime_error("parse error: " + w) {}
};

Rational rational_from_decimal(const std::string& s) {
    // "12", "-3.25", "7/4"
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rational r(s, 10);
        r.canonicalize();
        return r;
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        Rational r(s, 10);
        r.canonicalize();
        return r;
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    if (digits.find('.') != std::string::npos)
        throw ParseError("malformed number '" + s + "'");
    size_t frac_len = s.size() - dot - 1;
    BigInt num(digits, 10);
    BigInt den = 1;
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    return Rational(num) / Rational(den);
}

struct Lexer {
    std::string s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool match_word(const std::string& w) {
        skip();
        if (s.compare(pos, w.size(), w) == 0) {
            pos += w.size();
            return true;
        }
        return false;
    }
    std::string number() {
        skip();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.'))
            ++pos;
        if (start == pos) throw ParseError("expected a number at '" + s.substr(pos) + "'");
        return s.substr(start, pos - start);
    }
};

// Expression values are algebraic numbers; only rational-by-algebraic
// combinations are supported, which covers the built-in threshold constants.
struct ExprParser {
    Lexer lex;

    AlgebraicReal parse() {
        AlgebraicReal v = expr();
        lex.skip();
        if (lex.pos != lex.s.size())
            throw ParseError("trailing input '" + lex.s.substr(lex.pos) + "'");
        return v;
    }

    AlgebraicReal expr() {
        AlgebraicReal v = term();
        for (;;) {
            if (lex.eat('+'))
                v = add(v, term());
            else if (lex.eat('-'))
                v = add(v, term().times_rational(-1));
            else
                return v;
        }
    }

    AlgebraicReal term() {
        AlgebraicReal v = factor();
        for (;;) {
            char c = lex.peek();
            if (c == '*') {
                lex.eat('*');
                v = mul(v, factor());
            } else if (c == '/') {
                lex.eat('/');
                AlgebraicReal d = factor();
                if (d.compare(Rational(0)) == 0) throw ParseError("division by zero");
                v = mul(v, d.inverse());
            } else if (c == '(' || c == 's') {
                v = mul(v, factor());  // implicit multiplication: 2sqrt(2)
            } else {
                return v;
            }
        }
    }

    AlgebraicReal factor() {
        if (lex.eat('-')) return factor().times_rational(-1);
        if (lex.eat('+')) return factor();
        if (lex.match_word("sqrt")) {
            if (!lex.eat('(')) throw ParseError("sqrt needs parentheses");
            AlgebraicReal v = expr();
            if (!lex.eat(')')) throw ParseError("missing ')'");
            return v.sqrt();
        }
        if (lex.eat('(')) {
            AlgebraicReal v = expr();
            if (!lex.eat(')')) throw ParseError("missing ')'");
            return v;
        }
        return AlgebraicReal::from_rational(rational_from_decimal(lex.number()));
    }

    static AlgebraicReal add(const AlgebraicReal& a, const AlgebraicReal& b) {
        if (a.is_rational()) return b.plus_rational(a.rational_value());
        if (b.is_rational()) return a.plus_rational(b.rational_value());
        throw ParseError("sum of two irrational subexpressions is unsupported");
    }

    static AlgebraicReal mul(const AlgebraicReal& a, const AlgebraicReal& b) {
        if (a.is_rational()) {
            if (a.rational_value() == 0) return AlgebraicReal::from_int(0);
            return b.times_rational(a.rational_value());
        }
        if (b.is_rational()) {
            if (b.rational_value() == 0) return AlgebraicReal::from_int(0);
            return a.times_rational(b.rational_value());
        }
        throw ParseError("product of two irrational subexpressions is unsupported");
    }
};

AlgebraicReal parse_poly_form(const std::string& text, size_t at) {
    std::string poly_s = text.substr(0, at);
    std::string iv_s = text.substr(at + 1);
    // Interval "[lo,hi]".
    if (iv_s.size() < 5 || iv_s.front() != '[' || iv_s.back() != ']')
        throw ParseError("expected @[lo,hi]");
    std::string inner = iv_s.substr(1, iv_s.size() - 2);
    auto comma = inner.find(',');
    if (comma == std::string::npos) throw ParseError("interval needs a comma");
    Rational lo = rational_from_decimal(inner.substr(0, comma));
    Rational hi = rational_from_decimal(inner.substr(comma + 1));

    // Polynomial in x with integer coefficients.
    Lexer lex{poly_s, 0};
    std::vector<BigInt> coeffs;
    auto bump = [&](int deg, const BigInt& c) {
        if (static_cast<int>(coeffs.size()) <= deg) coeffs.resize(deg + 1, BigInt(0));
        coeffs[deg] += c;
    };
    bool first = true;
    for (;;) {
        lex.skip();
        if (lex.pos == lex.s.size()) break;
        int sign = 1;
        if (lex.eat('+')) sign = 1;
        else if (lex.eat('-')) sign = -1;
        else if (!first) throw ParseError("expected '+' or '-' between terms");
        first = false;
        BigInt coeff = 1;
        bool have_coeff = false;
        lex.skip();
        if (lex.pos < lex.s.size() && std::isdigit(static_cast<unsigned char>(lex.s[lex.pos]))) {
            std::string num = lex.number();
            if (num.find('.') != std::string::npos)
                throw ParseError("polynomial coefficients must be integers");
            coeff = BigInt(num);
            have_coeff = true;
        }
        lex.eat('*');
        int deg = 0;
        if (lex.eat('x')) {
            deg = 1;
            if (lex.eat('^')) {
                std::string e = lex.number();
                deg = std::stoi(e);
            }
        } else if (!have_coeff) {
            throw ParseError("expected coefficient or x");
        }
        bump(deg, sign * coeff);
    }
    return AlgebraicReal(IntPoly(std::move(coeffs)), lo, hi);
}

}  // namespace

AlgebraicReal parse_lambda_expr(const std::string& text) {
    auto at = text.find('@');
    if (at != std::string::npos) return parse_poly_form(text, at);
    ExprParser p{Lexer{text, 0}};
    return p.parse();
}

}  // namespace eqlines
