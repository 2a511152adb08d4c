#pragma once

#include <string_view>

#include "mouldlab/ratfun.hpp"

namespace mouldlab {

// Grammar (whitespace ignored):
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' ['-'] integer)?
//   primary := integer | 'u' index | 't' | 'x' | '(' expr ')'
// Throws ParseError with the 0-based position of the offending token.
RatFun parse_expression(std::string_view text);

} // namespace mouldlab
