#include "gridzero/parse.hpp"

#include <cctype>

#include "gridzero/errors.hpp"

namespace gridzero {
namespace {

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line = 1, col = 1;

    void skip_space() {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '\n') {
                ++line;
                col = 1;
                ++pos;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++col;
                ++pos;
            } else {
                break;
            }
        }
    }

    bool eof() {
        skip_space();
        return pos >= text.size();
    }

    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }

    char take() {
        char c = peek();
        ++pos;
        ++col;
        return c;
    }

    [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(line, col, msg); }
};

struct Parser {
    Lexer lex;

    Polynomial parse_expr() {
        bool negate = false;
        char c = lex.peek();
        if (c == '+' || c == '-') {
            lex.take();
            negate = (c == '-');
        }
        Polynomial acc = parse_term();
        if (negate) acc = -acc;
        while (true) {
            c = lex.peek();
            if (c != '+' && c != '-') break;
            lex.take();
            Polynomial rhs = parse_term();
            if (c == '+')
                acc += rhs;
            else
                acc -= rhs;
        }
        return acc;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (lex.peek() == '*') {
            lex.take();
            acc = acc * parse_factor();
        }
        return acc;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_atom();
        if (lex.peek() == '^') {
            lex.take();
            unsigned e = parse_uint_small();
            base = base.pow(e);
        }
        return base;
    }

    Polynomial parse_atom() {
        char c = lex.peek();
        if (c == '(') {
            lex.take();
            Polynomial inner = parse_expr();
            if (lex.peek() != ')') lex.fail("expected ')'");
            lex.take();
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = parse_integer();
            if (lex.peek() == '/') {
                lex.take();
                std::size_t dline = lex.line, dcol = lex.col;
                if (!std::isdigit(static_cast<unsigned char>(lex.peek())))
                    lex.fail("expected denominator digits after '/'");
                mpz_class den = parse_integer();
                if (den == 0) throw SyntaxError(dline, dcol, "zero denominator");
                mpq_class q(num, den);
                q.canonicalize();
                return Polynomial::constant(GaussRational(q));
            }
            return Polynomial::constant(GaussRational(mpq_class(num)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t vline = lex.line, vcol = lex.col;
            std::string name;
            while (lex.pos < lex.text.size() &&
                   std::isalpha(static_cast<unsigned char>(lex.text[lex.pos]))) {
                name += lex.text[lex.pos];
                ++lex.pos;
                ++lex.col;
            }
            if (name == "i") return Polynomial::constant(GaussRational::unit_i());
            if (name.size() == 1) {
                switch (name[0]) {
                    case 'x': return Polynomial::variable(Var::x);
                    case 'y': return Polynomial::variable(Var::y);
                    case 's': return Polynomial::variable(Var::s);
                    case 't': return Polynomial::variable(Var::t);
                    default: break;
                }
            }
            throw UnknownVariableError(vline, vcol, name);
        }
        if (c == '\0') lex.fail("unexpected end of input");
        lex.fail(std::string("unexpected character '") + c + "'");
    }

    mpz_class parse_integer() {
        std::string digits;
        while (lex.pos < lex.text.size() &&
               std::isdigit(static_cast<unsigned char>(lex.text[lex.pos]))) {
            digits += lex.text[lex.pos];
            ++lex.pos;
            ++lex.col;
        }
        return mpz_class(digits);
    }

    unsigned parse_uint_small() {
        if (!std::isdigit(static_cast<unsigned char>(lex.peek())))
            lex.fail("expected a nonnegative integer exponent");
        mpz_class v = parse_integer();
        if (v > 64) lex.fail("exponent too large");
        return static_cast<unsigned>(v.get_ui());
    }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
    Parser p{Lexer{text}};
    if (p.lex.eof()) p.lex.fail("empty expression");
    Polynomial result = p.parse_expr();
    if (!p.lex.eof()) p.lex.fail("trailing input");
    return result;
}

GaussRational parse_gauss_rational(std::string_view text) {
    Polynomial p = parse_polynomial(text);
    if (!p.is_constant()) throw SyntaxError(1, 1, "expected a constant, got a polynomial");
    return p.constant_value();
}

}  // namespace gridzero
