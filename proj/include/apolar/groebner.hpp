#pragma once

#include <utility>
#include <vector>

#include "apolar/order.hpp"

namespace apolar {

std::pair<Monomial, Rat> leading_term(const Polynomial& p, Order ord);
Monomial leading_monomial(const Polynomial& p, Order ord);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, Order ord);

// Multivariate division normal form. Divisor choice is the first generator
// in list order whose leading monomial divides the current term; inputs here
// are homogeneous so the loop terminates.
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& gens,
                  Order ord);

struct GroebnerReport {
  size_t pairs_checked = 0;
  struct Failure {
    size_t i, j;
    Polynomial normal_form;
  };
  std::vector<Failure> failures;
  bool passed() const { return failures.empty(); }
};

// Buchberger criterion: every S-pair reduces to zero.
GroebnerReport is_groebner(const std::vector<Polynomial>& gens, Order ord);

}  // namespace apolar
