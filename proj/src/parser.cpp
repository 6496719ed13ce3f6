#include <cctype>

#include "cutcheck/expr.hpp"

namespace cutcheck {

namespace {

struct Parser {
    const std::string& s;
    Mode mode;
    size_t i = 0;

    [[noreturn]] void fail(const std::string& msg, size_t at) const { throw ParseError(msg, at); }

    void skip_ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) fail(std::string("expected '") + c + "' " + what, i);
    }

    ExprPtr parse_expr() {
        ExprPtr e = parse_term();
        for (;;) {
            if (accept('+')) e = ex_add(e, parse_term());
            else if (accept('-')) e = ex_sub(e, parse_term());
            else return e;
        }
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_factor();
        for (;;) {
            if (accept('*')) e = ex_mul(e, parse_factor());
            else if (accept('/')) e = ex_div(e, parse_factor());
            else return e;
        }
    }

    ExprPtr parse_factor() {
        ExprPtr b = parse_base();
        if (accept('^')) return ex_pow(std::move(b), parse_exponent());
        return b;
    }

    int parse_exponent() {
        skip_ws();
        size_t start = i;
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            neg = s[i] == '-';
            ++i;
        }
        if (i >= s.size() || !std::isdigit((unsigned char)s[i]))
            fail("expected integer exponent after '^'", i);
        long v = 0;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) {
            v = v * 10 + (s[i] - '0');
            if (v > 1000) fail("exponent out of range", start);
            ++i;
        }
        return (int)(neg ? -v : v);
    }

    ExprPtr parse_base() {
        skip_ws();
        if (i >= s.size()) fail("unexpected end of input", i);
        char c = s[i];
        if (c == '(') {
            ++i;
            ExprPtr e = parse_expr();
            expect(')', "to close parenthesis");
            return e;
        }
        if (c == '-') {
            ++i;
            return ex_neg(parse_base());
        }
        if (std::isdigit((unsigned char)c)) return parse_number();
        if (std::isalpha((unsigned char)c)) return parse_ident();
        fail(std::string("unexpected character '") + c + "'", i);
    }

    ExprPtr parse_number() {
        size_t start = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (i < s.size() && s[i] == '.') {
            ++i;
            if (i >= s.size() || !std::isdigit((unsigned char)s[i]))
                fail("expected digits after decimal point", i);
            while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
            return ex_const(rat_from_decimal(s.substr(start, i - start)));
        }
        return ex_const(Rat(Int(s.substr(start, i - start))));
    }

    ExprPtr parse_ident() {
        size_t start = i;
        while (i < s.size() && std::isalnum((unsigned char)s[i])) ++i;
        std::string name = s.substr(start, i - start);
        for (auto& ch : name) ch = (char)std::tolower((unsigned char)ch);
        if (peek() == '(') {
            NodeKind k;
            if (name == "sqrt") k = NodeKind::Sqrt;
            else if (name == "log") k = NodeKind::Log;
            else if (name == "exp") k = NodeKind::Exp;
            else if (name == "arccosh") k = NodeKind::Arccosh;
            else if (name == "arctan") k = NodeKind::Arctan;
            else fail("unknown function '" + name + "'", start);
            ++i;
            ExprPtr a = parse_expr();
            expect(')', "to close function argument");
            switch (k) {
                case NodeKind::Sqrt: return ex_sqrt(std::move(a));
                case NodeKind::Log: return ex_log(std::move(a));
                case NodeKind::Exp: return ex_exp(std::move(a));
                case NodeKind::Arccosh: return ex_arccosh(std::move(a));
                default: return ex_arctan(std::move(a));
            }
        }
        if (name == "i") return ex_i();
        if (mode == Mode::Complex) {
            if (name == "z") return ex_var("z");
            fail("unknown variable '" + name + "' (complex mode uses z)", start);
        }
        if (name == "x" || name == "y") return ex_var(name);
        fail("unknown variable '" + name + "' (real mode uses x and y)", start);
    }
};

}  // namespace

ExprPtr parse(const std::string& text, Mode mode) {
    Parser p{text, mode};
    ExprPtr e = p.parse_expr();
    p.skip_ws();
    if (p.i < text.size()) p.fail("unexpected trailing input", p.i);
    return e;
}

}  // namespace cutcheck
