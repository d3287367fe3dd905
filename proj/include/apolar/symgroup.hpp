#pragma once

#include <map>
#include <string>
#include <vector>

#include "apolar/ring.hpp"

namespace apolar {

// Partition of n with weakly decreasing positive parts.
using Partition = std::vector<int>;

int partition_weight(const Partition& p);
std::string partition_name(const Partition& p);  // "4,2" style
Partition conjugate_partition(const Partition& p);

// All partitions of n in descending lexicographic order ([n] first,
// [1,...,1] last) - the canonical output order.
std::vector<Partition> partitions_of(int n);

struct ConjugacyClass {
  Partition cycle_type;
  Int size;  // n! / prod(j^{m_j} m_j!)
};

// Conjugacy classes of S_n with cycle types in ascending lexicographic
// order ([1,..,1] first) - the canonical index order of CharacterVector.
std::vector<ConjugacyClass> conjugacy_classes(int n);

// Permutation as 1-based images: sigma maps i to perm[i-1].
using Perm = std::vector<int>;

// Canonical class representative: cycles laid out on consecutive integers,
// largest cycle first (e.g. [3,2,1] of S_6 -> (1 2 3)(4 5)).
Perm class_representative(const Partition& cycle_type);
Partition cycle_type_of(const Perm& sigma);

// Murnaghan-Nakayama value of the irreducible character chi_lambda on the
// class of the given cycle type.
Int irreducible_character(const Partition& lambda, const Partition& cycle_type);

// Integer character values indexed by the conjugacy classes of S_n in
// canonical order.
struct CharacterVector {
  int n = 0;
  std::vector<Int> values;
};

CharacterVector irreducible_character_vector(const Partition& lambda);

// <chi, psi> = (1/n!) sum over classes of size * chi * psi.
Rat character_inner(const CharacterVector& a, const CharacterVector& b);

// sigma(x_ij) = x_{sigma^-1(i) sigma^-1(j)}, a ring automorphism.
Polynomial act_on_polynomial(const Perm& sigma, const Polynomial& p);
Monomial act_on_monomial(const RingSpec& ring, const Perm& sigma,
                         const Monomial& m);

// Permutation character of a set of monomials stable under the S_n action:
// chi(class) = number of monomials fixed by one representative.
CharacterVector monomial_space_character(const std::vector<Monomial>& monomials,
                                         const RingSpec& ring, int n);

// Multiplicities <chi, chi_lambda>; throws if any multiplicity fails to be a
// nonnegative integer (the input was not a character).
std::map<Partition, long> decompose_character(const CharacterVector& chi);

// The maps Phi(h) = h . perm(X) and Psi(h) = h . det(X) on the span of the
// hafnian monomials of the n x n symmetric matrix (n even), under
// differentiation.
struct PhiPsiMaps {
  int n = 0;
  size_t monhaf_dim = 0;
  size_t phi_rank = 0, phi_kernel_dim = 0;
  size_t psi_rank = 0, psi_kernel_dim = 0;
  std::vector<Polynomial> phi_kernel_basis;  // in S-variables
  std::vector<Polynomial> psi_kernel_basis;
};

PhiPsiMaps phi_psi_maps(int n);

}  // namespace apolar
