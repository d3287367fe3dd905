#pragma once

#include <optional>
#include <vector>

#include "apolar/invariants.hpp"

namespace apolar {

Int catalan(int n);
// Classic Narayana number N(m, t) = C(m,t) C(m,t-1) / m.
Int narayana(int m, int t);

// Minor [a|b] with a_i <= b_i componentwise (both strictly increasing).
struct DosetMinor {
  std::vector<int> rows;
  std::vector<int> cols;
};

std::vector<DosetMinor> enumerate_doset_minors(int n, int t);
Monomial flag_monomial(const RingSpec& ring, const DosetMinor& m);

// Lattice path from (0,0) to (n,n) that never rises above y = x.
struct DyckPath {
  // true = step (1,0), false = step (0,1); length 2n.
  std::vector<bool> steps;
  int corner_count() const;  // direction changes from (1,0) to (0,1)
};

std::vector<DyckPath> enumerate_dyck(int n);
Int count_dyck(int n);
Int count_dyck_with_corners(int n, int t);

enum class MonomialClass { unacceptable, conca_initial, acceptable_non_initial };

// Partition of the degree-k monomials: unacceptable (divides no term of
// det(X)); Conca initial (flag monomial of a doset minor, or sorted initial
// of a sub-permanent for the permanent); the rest.
MonomialClass classify_monomial(const Monomial& m, FormKind form, int n);

// Flag/initial monomial sets of the k x k doset minors resp. sub-permanents.
std::vector<Monomial> conca_monomials(int n, int k);
std::vector<Monomial> subperm_initial_monomials(int n, int k);

// Pair notation (a_1..a_k | b_1..b_k) of a monomial, rows weakly increasing.
std::pair<std::vector<int>, std::vector<int>> pair_notation(
    const RingSpec& ring, const Monomial& m);

// First (b_i, b_j) with i < j and b_i >= b_j in the given column sequence.
std::optional<std::pair<int, int>> find_reversal_pair(
    const std::vector<int>& cols);

}  // namespace apolar
