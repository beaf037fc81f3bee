#ifndef BETAINV_PARSER_HPP
#define BETAINV_PARSER_HPP

#include <string_view>

#include "betainv/poly.hpp"

namespace betainv {

/// Parses polynomial text over the given ring.
///
/// Grammar: integer or rational literals (`3`, `5/7`), ring variables,
/// binary `+ - *`, unary `-`, `^` with a non-negative integer exponent,
/// parentheses. Multiplication is always explicit.
/// Throws ParseError with the offending position.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Parses and validates a degree-1 homogeneous form.
LinearForm parse_linear_form(std::string_view text, const RingPtr& ring);

}  // namespace betainv

#endif
