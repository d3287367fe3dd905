#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "apolar/numbers.hpp"

namespace apolar {

// Sparse row vector: (position, coefficient) pairs sorted by position.
// Position 0 is the greatest basis element of the ambient ordered basis, so
// the leading entry of a row is its first entry.
using SparseVec = std::vector<std::pair<uint32_t, Rat>>;

// Incremental exact row echelonization. Insertion keeps a forward echelon
// (each inserted row is fully reduced against the pivots present at the
// time); finalize() back-substitutes to the unique reduced row echelon form.
class Echelon {
 public:
  // Reduces v against the current rows and, if a nonzero residue remains,
  // normalizes it (leading coefficient 1) and installs it as a new pivot.
  // Returns true when the rank grew.
  bool insert(SparseVec v);

  // Normal form of v with respect to the current pivot rows.
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  size_t rank() const { return rows_.size(); }
  // Pivot position -> normalized row, ascending by pivot.
  const std::map<uint32_t, SparseVec>& rows() const { return rows_; }

  // Back-substitution pass; afterwards the rows are the reduced row echelon
  // basis of the span (canonical for the subspace).
  void finalize();

 private:
  std::map<uint32_t, SparseVec> rows_;
};

// Rank of a list of sparse rows (positions need not relate to any monomial
// order; any consistent labeling works).
size_t sparse_rank(std::vector<SparseVec> rows);

SparseVec sparse_axpy(const SparseVec& v, const Rat& c, const SparseVec& w);

}  // namespace apolar
