#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "pdo/diffop.hpp"

namespace pdo::frontend {

/// Value of a parsed expression. Anything containing a D atom (or a bound
/// operator) is a DiffOp; a pure polynomial comes back as a MultiPoly; a
/// non-polynomial rational function is an order-zero DiffOp.
using Expression = std::variant<DiffOp, MultiPoly>;

using Bindings = std::map<std::string, DiffOp, std::less<>>;

/// Grammar:
///   expr   := term (("+" | "-") term)*
///   term   := unary (("*" | "/" | <juxtaposition>) unary)*
///   unary  := "-" unary | factor
///   factor := atom ("^" uint)?
///   atom   := "D" uint | "x" uint | "z" uint | "mu" uint | "c" uint
///           | "lambda" | "gamma" | uint | name | "(" expr ")"
/// "*" and juxtaposition are composition; "/" only divides by order-zero
/// expressions. SyntaxError carries the byte position; DimensionExceeded is
/// raised for D, x or z indices above dim.
Expression parse_expression(std::string_view src, std::size_t dim, const Bindings& bindings = {});

/// parse_expression, with a polynomial result promoted to an order-zero
/// operator.
DiffOp parse_operator(std::string_view src, std::size_t dim, const Bindings& bindings = {});

/// parse_expression, requiring a polynomial; InvalidArgument otherwise.
MultiPoly parse_polynomial(std::string_view src, std::size_t dim, const Bindings& bindings = {});

DiffOp as_operator(const Expression& e, std::size_t dim);

bool is_reserved_name(std::string_view name);

}  // namespace pdo::frontend
