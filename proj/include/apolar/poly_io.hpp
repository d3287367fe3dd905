#pragma once

#include <string>

#include "apolar/ring.hpp"

namespace apolar {

struct ParseError : std::runtime_error {
  size_t offset;
  ParseError(const std::string& msg, size_t off)
      : std::runtime_error(msg + " (at byte " + std::to_string(off) + ")"),
        offset(off) {}
};

// Grammar:  poly   := term (('+'|'-') term)*
//           term   := rat | [rat '*']? factor ('*' factor)*
//           factor := var ('^' uint)?
//           var    := ('x'|'y'|'X'|'Y') '[' uint ',' uint ']'
//           rat    := int ('/' uint)?
// Whitespace is ignored. The letter is conventional only; the RingSpec
// decides the semantics.
Polynomial parse_poly(const RingSpec& ring, const std::string& text);

// Canonical printing: terms descending in Conca-lex order, reduced fractions,
// no unit coefficients or exponents. `letter` defaults to 'x' for usual
// flavor and 'X' for divided power.
std::string print_poly(const Polynomial& p, char letter = 0);

}  // namespace apolar
