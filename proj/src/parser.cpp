#include "qpolya/parser.hpp"

#include <cctype>

namespace qpolya {

namespace {

struct ExprParser {
    std::string_view s;
    std::size_t pos = 0;
    unsigned long order;

    explicit ExprParser(std::string_view text, unsigned long ord) : s(text), order(ord) {}

    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos); }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }

    bool digit_at(std::size_t p) const {
        return p < s.size() && s[p] >= '0' && s[p] <= '9';
    }

    std::string read_digits() {
        std::size_t start = pos;
        while (digit_at(pos)) ++pos;
        return std::string(s.substr(start, pos - start));
    }

    Cyclotomic parse_expr() {
        Cyclotomic acc = parse_term();
        while (true) {
            if (accept('+')) acc += parse_term();
            else if (accept('-')) acc -= parse_term();
            else return acc;
        }
    }

    Cyclotomic parse_term() {
        Cyclotomic acc = parse_unary();
        while (true) {
            if (accept('*')) {
                acc *= parse_unary();
            } else if (accept('/')) {
                Cyclotomic rhs = parse_unary();
                if (rhs.is_zero_value())
                    throw DomainError("division_by_zero", "division by zero in expression");
                acc /= rhs;
            } else {
                return acc;
            }
        }
    }

    Cyclotomic parse_unary() {
        if (accept('-')) return -parse_unary();
        Cyclotomic v = parse_atom();
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            skip_ws();
            bool neg = false;
            if (pos < s.size() && s[pos] == '-') {
                neg = true;
                ++pos;
            }
            if (!digit_at(pos)) fail("expected integer exponent after '^'");
            std::string digits = read_digits();
            long e;
            try {
                e = std::stol(digits);
            } catch (...) {
                fail("exponent out of range");
            }
            if (neg && v.is_zero_value())
                throw DomainError("division_by_zero", "negative power of zero");
            v = v.pow(neg ? -e : e);
        }
        return v;
    }

    Cyclotomic parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of expression");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Cyclotomic v = parse_expr();
            skip_ws();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (c == 'z') {
            ++pos;
            return Cyclotomic::zeta(order);
        }
        if (c >= '0' && c <= '9') {
            std::string num = read_digits();
            // maximal munch: '/' directly followed by a digit stays in the literal
            if (pos + 1 < s.size() && s[pos] == '/' && digit_at(pos + 1)) {
                ++pos;
                std::string den = read_digits();
                Int d(den, 10);
                if (sgn(d) == 0)
                    throw DomainError("division_by_zero", "rational literal with zero denominator");
                return Cyclotomic(make_rational(Int(num, 10), d), order);
            }
            return Cyclotomic(Rational(Int(num, 10)), order);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

Cyclotomic parse_cyclotomic_expr(std::string_view text, unsigned long order) {
    if (order == 0)
        throw DomainError("out_of_range", "cyclotomic order must be positive");
    ExprParser p(text, order);
    Cyclotomic v = p.parse_expr();
    p.skip_ws();
    if (p.pos != p.s.size()) p.fail("unexpected trailing input");
    return v;
}

} // namespace qpolya
