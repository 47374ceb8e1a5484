#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "funcid/gf2rat.hpp"

namespace funcid {

/// Parse failure carrying the byte offset of the offending character.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// AST for GF(2)(t) expressions.
///
/// Grammar (whitespace insignificant; "-" is a synonym of "+" in
/// characteristic 2; "/" binds like "*", so canonical quotient renderings
/// such as "(t^2+1)/t" parse back):
///   expr   := term { ("+" | "-") term }
///   term   := factor { ("*" | "/") factor }
///   factor := atom [ "^" integer ]
///   atom   := "t" | "0" | "1" | "(" expr ")"
struct ExprAst {
    enum class Kind { var_t, const_zero, const_one, add, mul, pow, quotient };

    Kind kind = Kind::const_zero;
    long long exponent = 0;         // pow nodes
    std::vector<ExprAst> children;  // add/mul/quotient: 2; pow: 1
};

ExprAst parse_expr(std::string_view text);

/// Evaluate to a reduced rational function. Zero denominators and negative
/// powers of zero surface here (DivisionByZero), not at parse time.
Gf2Rat eval_expr(const ExprAst& ast);

/// parse_expr + eval_expr.
Gf2Rat parse_rat(std::string_view text);

/// Canonical rendering: terms in strictly descending degree, quotient parts
/// parenthesized only when they have more than one term. parse_rat is a left
/// inverse: parse_rat(render_expr(v)) == v.
std::string render_expr(const Gf2Rat& value);

}  // namespace funcid
