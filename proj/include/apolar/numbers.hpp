#pragma once

#include <gmpxx.h>

#include <string>

namespace apolar {

// Exact arithmetic everywhere: arbitrary-precision rationals for polynomial
// coefficients and matrix entries, integers for counting formulas.
using Rat = mpq_class;
using Int = mpz_class;

Int factorial(long n);
Int binomial(long n, long k);

// Falling factorial n * (n-1) * ... * (n-k+1).
Int falling(long n, long k);

long long to_ll(const Int& v);

// Renders a rational the way the reference tables do: integers without a
// decimal point, otherwise truncated (not rounded) to `places` digits with
// trailing zeros stripped ("43/3",1 -> "14.3", "889/4",2 -> "222.25").
std::string rat_decimal(const Rat& v, int places);

// Exact "p/q" (or "p" when q = 1).
std::string rat_exact(const Rat& v);

}  // namespace apolar
