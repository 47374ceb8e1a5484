#include "funcid/expr.hpp"

#include <cctype>

#include "funcid/errors.hpp"

namespace funcid {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprAst run() {
        ExprAst e = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    ExprAst expr() {
        ExprAst lhs = term();
        while (true) {
            const char c = peek();
            if (c != '+' && c != '-') break;  // "-" coincides with "+" over GF(2)
            ++pos_;
            ExprAst node{ExprAst::Kind::add, 0, {}};
            node.children.push_back(std::move(lhs));
            node.children.push_back(term());
            lhs = std::move(node);
        }
        return lhs;
    }

    ExprAst term() {
        ExprAst lhs = factor();
        while (true) {
            const char c = peek();
            if (c != '*' && c != '/') break;
            ++pos_;
            ExprAst node{c == '*' ? ExprAst::Kind::mul : ExprAst::Kind::quotient, 0, {}};
            node.children.push_back(std::move(lhs));
            node.children.push_back(factor());
            lhs = std::move(node);
        }
        return lhs;
    }

    ExprAst factor() {
        ExprAst base = atom();
        if (eat('^')) {
            ExprAst node{ExprAst::Kind::pow, integer(), {}};
            node.children.push_back(std::move(base));
            return node;
        }
        return base;
    }

    ExprAst atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == 't') {
            ++pos_;
            return {ExprAst::Kind::var_t, 0, {}};
        }
        if (c == '0') {
            ++pos_;
            return {ExprAst::Kind::const_zero, 0, {}};
        }
        if (c == '1') {
            ++pos_;
            return {ExprAst::Kind::const_one, 0, {}};
        }
        if (c == '(') {
            ++pos_;
            ExprAst inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        fail(std::string("expected 't', '0', '1' or '('; got '") + c + "'");
    }

    long long integer() {
        skip_ws();
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            fail("expected integer exponent");
        }
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > (1LL << 20)) fail("exponent too large");
            ++pos_;
        }
        return negative ? -v : v;
    }
};

}  // namespace

ExprAst parse_expr(std::string_view text) { return Parser(text).run(); }

Gf2Rat eval_expr(const ExprAst& ast) {
    switch (ast.kind) {
        case ExprAst::Kind::var_t: return Gf2Rat::t();
        case ExprAst::Kind::const_zero: return Gf2Rat::zero();
        case ExprAst::Kind::const_one: return Gf2Rat::one();
        case ExprAst::Kind::add: return eval_expr(ast.children[0]) + eval_expr(ast.children[1]);
        case ExprAst::Kind::mul: return eval_expr(ast.children[0]) * eval_expr(ast.children[1]);
        case ExprAst::Kind::pow: return eval_expr(ast.children[0]).pow(ast.exponent);
        case ExprAst::Kind::quotient: {
            const Gf2Rat den = eval_expr(ast.children[1]);
            if (den.is_zero()) throw DivisionByZero("expression denominator evaluates to zero");
            return eval_expr(ast.children[0]) / den;
        }
    }
    throw UsageError("eval_expr: bad node");
}

Gf2Rat parse_rat(std::string_view text) { return eval_expr(parse_expr(text)); }

std::string render_expr(const Gf2Rat& value) { return value.to_string(); }

}  // namespace funcid
