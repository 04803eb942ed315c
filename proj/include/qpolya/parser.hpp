#pragma once

#include <string_view>

#include "qpolya/cyclotomic.hpp"

namespace qpolya {

/// Parse an arithmetic expression over Q(zeta_order); 'z' denotes zeta_order.
///
///   expr     := term (('+' | '-') term)*
///   term     := unary (('*' | '/') unary)*
///   unary    := '-' unary | atom ('^' integer)?
///   atom     := rational | 'z' | '(' expr ')'
///   rational := integer ('/' positive-integer)?
///
/// The rational literal is lexed by maximal munch: a '/' directly followed by
/// a digit continues the literal ("3/2^2" is (3/2)^2), any other '/' is the
/// division operator. Whitespace is allowed between tokens. Syntax problems
/// raise SyntaxError with the character position; division by zero (and '^'
/// with a negative exponent on zero) raises DomainError("division_by_zero").
Cyclotomic parse_cyclotomic_expr(std::string_view text, unsigned long order);

} // namespace qpolya
