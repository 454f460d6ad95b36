#pragma once

#include <string_view>

#include "mathieu/matrix.hpp"
#include "mathieu/polynomial.hpp"
#include "mathieu/weyl.hpp"

namespace mathieu {

/// Grammar:
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' ['-'] integer)?
///   base   := integer ['/' integer] | 'i' | identifier | '(' expr ')'
/// Multiplication is always explicit. 'i' is the imaginary unit (ring qi
/// only). Negative exponents are accepted on monomials in Laurent
/// variables. Errors are ParseError with line and column.
Polynomial parse_polynomial(std::string_view src, const VariablesPtr& vars, const Ring& ring);

/// An operator written over operator_variables(coordinates), e.g.
/// "d1^2 + d2^2" or "z1*d1 + 1". Each monomial is read in the order
/// coordinates first, derivations last.
WeylElement parse_operator(std::string_view src, const VariablesPtr& coordinates, const Ring& ring);

/// Rows separated by ';', entries by ','; e.g. "0,1;0,0". Entries are ring
/// constants (any constant expression).
ScalarMatrix parse_matrix(std::string_view src, const Ring& ring);

}  // namespace mathieu
