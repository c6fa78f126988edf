#pragma once
/// Textual expressions for algebra elements.
///
/// The printers on RatQ, LaurentQ, and UElement emit strings such as
///
///     F[1]*F[3]*K[0,1,-1]*E[2]
///     -(q - 1/2)*F[2] + q^-2*K[0,0,1]
///     (q)/(q^2 - 1)
///
/// parse_expression turns any such string (and ordinary arithmetic built from
/// the same atoms) back into an element of the given algebra, so that every
/// printed element round-trips exactly.
///
/// Grammar (whitespace is insignificant):
///
///     expr    := term (('+' | '-') term)*
///     term    := factor (('*' | '/') factor)*        left associative
///     factor  := ('-' | '+') factor | primary ('^' integer)?
///     primary := number | 'q' | 'F[i]' | 'E[i]' | 'K[v1,...,vr]' | '(' expr ')'
///
/// Generator indices are 1-based; the K exponent vector must list one integer
/// per node.  Division requires a nonzero scalar divisor.  Negative powers
/// require a scalar or a scalar multiple of a K-monomial.  Parse failures
/// throw InputError with the offending offset.

#include <optional>
#include <string>

#include "qnichols/uq.hpp"

namespace qnichols {

/// Parses `text` into an element of `eng`'s algebra.  Throws InputError on
/// malformed input, out-of-range indices, or illegal division/powers.
UElement parse_expression(const UqEngine& eng, const std::string& text);

/// Returns the coefficient if `x` is a scalar multiple of the unit (the zero
/// element counts as the scalar 0), and nothing otherwise.
std::optional<RatQ> as_scalar(const UElement& x);

} // namespace qnichols
