#include "pde/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace pde {

namespace {

enum class Tok { integer, ident, plus, minus, star, slash, caret, lparen, rparen, comma, end };

struct Token {
    Tok type;
    std::string text;
    std::size_t pos;  // 1-based
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        std::size_t pos = i + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            toks.push_back({Tok::integer, text.substr(i, j - i), pos});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            toks.push_back({Tok::ident, text.substr(i, j - i), pos});
            i = j;
            continue;
        }
        Tok type;
        switch (c) {
            case '+': type = Tok::plus; break;
            case '-': type = Tok::minus; break;
            case '*': type = Tok::star; break;
            case '/': type = Tok::slash; break;
            case '^': type = Tok::caret; break;
            case '(': type = Tok::lparen; break;
            case ')': type = Tok::rparen; break;
            case ',': type = Tok::comma; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", pos);
        }
        toks.push_back({type, std::string(1, c), pos});
        ++i;
    }
    toks.push_back({Tok::end, "", text.size() + 1});
    return toks;
}

class Parser {
public:
    Parser(const std::string& text, const VariableSet& vars)
        : toks_(tokenize(text)), vars_(vars) {}

    Polynomial parse_polynomial() {
        Polynomial p = expr();
        expect_end();
        return p;
    }

    DiffOp parse_diffop() {
        DiffOp op(vars_);
        bool negative = accept(Tok::minus);
        op_term(op, negative);
        while (peek().type == Tok::plus || peek().type == Tok::minus) {
            bool neg = next().type == Tok::minus;
            op_term(op, neg);
        }
        expect_end();
        return op;
    }

private:
    std::vector<Token> toks_;
    std::size_t idx_ = 0;
    const VariableSet& vars_;

    const Token& peek() const { return toks_[idx_]; }
    const Token& next() { return toks_[idx_++]; }
    bool accept(Tok t) {
        if (peek().type != t) return false;
        ++idx_;
        return true;
    }

    void expect_end() {
        const Token& t = peek();
        if (t.type == Tok::end) return;
        if (t.type == Tok::slash)
            throw ParseError("'/' is only allowed between integer literals", t.pos);
        throw ParseError("unexpected '" + t.text + "'", t.pos);
    }

    Polynomial expr() {
        Polynomial p = term();
        while (peek().type == Tok::plus || peek().type == Tok::minus) {
            bool neg = next().type == Tok::minus;
            Polynomial q = term();
            p = neg ? p - q : p + q;
        }
        return p;
    }

    Polynomial term() {
        Polynomial p = unary();
        while (accept(Tok::star)) p = p * unary();
        return p;
    }

    Polynomial unary() {
        if (accept(Tok::minus)) return -unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = primary();
        if (!accept(Tok::caret)) return base;
        unsigned e = exponent_literal();
        Polynomial result = Polynomial::constant(vars_, 1);
        for (unsigned k = 0; k < e; ++k) result = result * base;
        return result;
    }

    unsigned exponent_literal() {
        const Token& t = peek();
        if (t.type != Tok::integer) {
            if (t.type == Tok::minus)
                throw ParseError("exponent must be a non-negative integer", t.pos);
            throw ParseError("expected integer exponent after '^'", t.pos);
        }
        next();
        if (t.text.size() > 4 || std::stoul(t.text) > 4096)
            throw ParseError("exponent too large", t.pos);
        return static_cast<unsigned>(std::stoul(t.text));
    }

    Polynomial primary() {
        const Token& t = peek();
        switch (t.type) {
            case Tok::integer: {
                next();
                BigInt num(t.text);
                if (accept(Tok::slash)) {
                    const Token& d = peek();
                    if (d.type != Tok::integer)
                        throw ParseError("'/' is only allowed between integer literals", d.pos);
                    next();
                    BigInt den(d.text);
                    if (den == 0) throw ParseError("division by zero", d.pos);
                    return Polynomial::constant(vars_, Rational(num, den));
                }
                return Polynomial::constant(vars_, Rational(num));
            }
            case Tok::ident: {
                next();
                if (!vars_.index(t.text))
                    throw ParseError("unknown variable '" + t.text + "'", t.pos);
                return Polynomial::variable(vars_, t.text);
            }
            case Tok::lparen: {
                next();
                Polynomial p = expr();
                if (!accept(Tok::rparen))
                    throw ParseError("expected ')'", peek().pos);
                return p;
            }
            case Tok::end:
                throw ParseError("unexpected end of input", t.pos);
            default:
                throw ParseError("unexpected '" + t.text + "'", t.pos);
        }
    }

    // one summand of an operator: polynomial factors and exactly one D token
    void op_term(DiffOp& op, bool negative) {
        Polynomial coeff = Polynomial::constant(vars_, negative ? -1 : 1);
        std::optional<DerivIndex> deriv;
        std::size_t term_pos = peek().pos;
        bool first = true;
        for (;;) {
            if (!first && !accept(Tok::star)) break;
            first = false;
            if (peek().type == Tok::ident && peek().text == "D" &&
                toks_[idx_ + 1].type == Tok::lparen) {
                const Token& dtok = next();
                if (deriv) throw ParseError("multiple D tokens in one term", dtok.pos);
                deriv = d_token();
            } else {
                coeff = coeff * unary();
            }
        }
        if (!deriv)
            throw ParseError("operator term has no D(var, order) token", term_pos);
        op.add_term(std::move(coeff), std::move(*deriv));
    }

    DerivIndex d_token() {
        if (!accept(Tok::lparen)) throw ParseError("expected '(' after D", peek().pos);
        const Token& var = peek();
        if (var.type != Tok::ident)
            throw ParseError("expected variable name in D(...)", var.pos);
        next();
        auto idx = vars_.index(var.text);
        if (!idx) throw ParseError("unknown variable '" + var.text + "'", var.pos);
        if (!accept(Tok::comma)) throw ParseError("expected ',' in D(...)", peek().pos);
        const Token& ord = peek();
        if (ord.type != Tok::integer)
            throw ParseError("expected derivative order in D(...)", ord.pos);
        next();
        if (ord.text.size() > 4)
            throw ParseError("derivative order too large", ord.pos);
        unsigned order = static_cast<unsigned>(std::stoul(ord.text));
        if (order < 1)
            throw ParseError("derivative order must be at least 1", ord.pos);
        if (!accept(Tok::rparen)) throw ParseError("expected ')' in D(...)", peek().pos);
        DerivIndex d{std::vector<unsigned>(vars_.size(), 0)};
        d.orders[*idx] = order;
        return d;
    }
};

}  // namespace

Polynomial parse_poly(const std::string& text, const VariableSet& vars) {
    return Parser(text, vars).parse_polynomial();
}

DiffOp parse_operator(const std::string& text, const VariableSet& vars) {
    return Parser(text, vars).parse_diffop();
}

}  // namespace pde
