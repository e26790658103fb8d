#pragma once

#include <string>
#include <string_view>

#include "gridzero/polynomial.hpp"

namespace gridzero {

/// Parse an expression over the grammar:
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ['^' UINT]
///   atom   := UINT ['/' UINT] | 'i' | 'x' | 'y' | 's' | 't' | '(' expr ')'
///
/// Implicit multiplication by juxtaposition is not allowed. Throws
/// SyntaxError (with line/column) or UnknownVariableError.
Polynomial parse_polynomial(std::string_view text);

/// Parse a constant cell such as "1/2", "3", "-1/2+2/3*i", "i". Accepts any
/// constant expression of the grammar; rejects expressions with variables.
GaussRational parse_gauss_rational(std::string_view text);

}  // namespace gridzero
