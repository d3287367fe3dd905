#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "apolar/order.hpp"
#include "apolar/ring.hpp"

namespace apolar {

// dim of the degree-k homogeneous slice: C(vars + k - 1, k).
Int graded_dimension(const RingSpec& ring, int k);

// All degree-k monomials, sorted descending under `ord` (index 0 = greatest).
std::vector<Monomial> monomial_basis(const RingSpec& ring, int k,
                                     Order ord = Order::conca_lex);

// Positions of monomials inside a fixed ordered basis.
class BasisIndex {
 public:
  BasisIndex() = default;
  BasisIndex(const RingSpec& ring, int k, Order ord);

  uint32_t position(const Monomial& m) const;
  const Monomial& monomial(uint32_t pos) const { return basis_[pos]; }
  size_t size() const { return basis_.size(); }
  const std::vector<Monomial>& monomials() const { return basis_; }

 private:
  std::vector<Monomial> basis_;
  std::unordered_map<Monomial, uint32_t, MonomialHash> index_;
};

}  // namespace apolar
