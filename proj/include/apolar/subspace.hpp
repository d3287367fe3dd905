#pragma once

#include <memory>
#include <set>
#include <vector>

#include "apolar/basis.hpp"
#include "apolar/echelon.hpp"

namespace apolar {

// A subspace of the degree-k homogeneous slice of a ring, held as a reduced
// row echelon basis over the ordered monomial basis of that slice.
class GradedSubspace {
 public:
  GradedSubspace() = default;
  GradedSubspace(RingSpec ring, int degree, Order ord);

  // Spans the given homogeneous polynomials (all of degree `degree`).
  static GradedSubspace span(RingSpec ring, int degree, Order ord,
                             const std::vector<Polynomial>& gens);

  const RingSpec& ring() const { return ring_; }
  int degree() const { return degree_; }
  Order order() const { return ord_; }
  const BasisIndex& ambient() const { return *ambient_; }
  size_t ambient_dim() const { return ambient_->size(); }

  size_t dim() const { return ech_.rank(); }
  bool contains(const Polynomial& p) const;
  Polynomial reduce(const Polynomial& p) const;

  // One polynomial per pivot, leading coefficient 1, leading monomial of row
  // i greater than that of row i+1 under the declared order.
  std::vector<Polynomial> basis() const;
  std::vector<Monomial> leading_monomials() const;

  // Inserts one more spanning vector; returns true if the dimension grew.
  bool insert(const Polynomial& p);
  void insert_all(const std::vector<Polynomial>& ps);
  // Raw insertion for callers that already hold position vectors.
  bool insert_vec(SparseVec v) { return ech_.insert(std::move(v)); }
  void finalize() { ech_.finalize(); }

  SparseVec to_vec(const Polynomial& p) const;
  Polynomial to_poly(const SparseVec& v) const;

  bool same_subspace(const GradedSubspace& o) const;

 private:
  RingSpec ring_;
  int degree_ = 0;
  Order ord_ = Order::conca_lex;
  std::shared_ptr<const BasisIndex> ambient_;
  Echelon ech_;
};

}  // namespace apolar
