#ifndef GBFORGE_POLY_TEXT_HPP
#define GBFORGE_POLY_TEXT_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "gbforge/polynomial.hpp"

namespace gbforge {

// Canonical text form: terms joined by " + " / " - " in descending order,
// each term "c*x1^a1*...*xr^ar" with unit exponents and unit coefficients
// elided. Rational coefficients render as "p/q", prime-field coefficients as
// the least non-negative residue. The zero polynomial renders as "0".
std::string render(const Polynomial& f, const MonomialOrder& order = MonomialOrder::lex());

/// Recursive-descent parser for the grammar above; whitespace-tolerant.
/// Throws ParseError with a character position on malformed input.
Polynomial parse_polynomial(const PolyRing& ring, std::string_view text);

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

} // namespace gbforge

#endif
