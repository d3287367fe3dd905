#pragma once

#include <compare>
#include <string>

#include "apolar/ring.hpp"

namespace apolar {

// conca_lex: pure lexicographic order induced by the row-major variable
// ranking x[1,1] > x[1,2] > ... > x[n,n] (a diagonal term order for minors).
// reverse_conca_lex: reverse lexicographic with the same ranking; the
// monomial whose last exponent difference (reading the ranking from greatest
// to least variable) is negative is the greater one. Neither compares total
// degree; callers work degree by degree.
enum class Order { conca_lex, reverse_conca_lex };

std::strong_ordering order_cmp(Order ord, const Monomial& a, const Monomial& b);
bool order_less(Order ord, const Monomial& a, const Monomial& b);

std::string order_name(Order ord);
Order order_from_name(const std::string& s);

}  // namespace apolar
