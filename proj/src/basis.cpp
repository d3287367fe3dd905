#include "apolar/basis.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace apolar {

Int graded_dimension(const RingSpec& ring, int k) {
  if (k < 0) return 0;
  return binomial(ring.var_count() + k - 1, k);
}

std::vector<Monomial> monomial_basis(const RingSpec& ring, int k, Order ord) {
  if (k < 0) throw std::invalid_argument("negative degree");
  std::vector<Monomial> out;
  const int vars = ring.var_count();
  std::vector<Monomial::Factor> current;
  // Greedy descent: giving the greatest variable the largest exponent first
  // yields descending lexicographic order directly.
  std::function<void(int, int)> rec = [&](int rank, int remaining) {
    if (remaining == 0) {
      out.push_back(Monomial(current));
      return;
    }
    if (rank == vars) return;
    if (rank == vars - 1) {
      current.push_back({static_cast<uint16_t>(rank),
                         static_cast<uint16_t>(remaining)});
      out.push_back(Monomial(current));
      current.pop_back();
      return;
    }
    for (int e = remaining; e >= 1; --e) {
      current.push_back(
          {static_cast<uint16_t>(rank), static_cast<uint16_t>(e)});
      rec(rank + 1, remaining - e);
      current.pop_back();
    }
    rec(rank + 1, remaining);
  };
  rec(0, k);
  if (ord == Order::reverse_conca_lex)
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
      return order_less(ord, b, a);
    });
  return out;
}

BasisIndex::BasisIndex(const RingSpec& ring, int k, Order ord)
    : basis_(monomial_basis(ring, k, ord)) {
  index_.reserve(basis_.size() * 2);
  for (uint32_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

uint32_t BasisIndex::position(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end())
    throw std::invalid_argument("monomial outside the graded basis");
  return it->second;
}

}  // namespace apolar
