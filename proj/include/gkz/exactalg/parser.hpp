#pragma once

#include <cstddef>
#include <string_view>

#include "gkz/exactalg/rational_function.hpp"

namespace gkz::exact {

/// Parses an expression over variables x1..x{nvars} into an exact rational
/// function.
///
/// Grammar (whitespace is ignored between tokens):
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := atom ('^' integer)?
///   atom    := integer | variable | '(' expr ')'
///
/// When nvars is zero the ring size is the largest variable index that
/// occurs. Errors raise ParseError carrying the byte offset of the offending
/// token.
RationalFunction parse_expression(std::string_view text, std::size_t nvars = 0);

}  // namespace gkz::exact
