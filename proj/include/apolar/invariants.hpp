#pragma once

#include <set>
#include <string>
#include <vector>

#include "apolar/subspace.hpp"
#include "apolar/symgroup.hpp"

namespace apolar {

// Strictly increasing row/column index lists of equal length.
struct SubmatrixSelector {
  std::vector<int> rows;
  std::vector<int> cols;
};

enum class FormKind { det, perm };

Polynomial det_poly(const RingSpec& ring);
Polynomial perm_poly(const RingSpec& ring);
// Symmetric layout, even n; sum over perfect matchings, all coefficients 1.
Polynomial hafnian_poly(const RingSpec& ring);
Polynomial minor_poly(const RingSpec& ring, const SubmatrixSelector& sel);
Polynomial subperm_poly(const RingSpec& ring, const SubmatrixSelector& sel);
Polynomial immanant_poly(const RingSpec& ring, const Partition& lambda);

// Monomial support of det(X) for the symmetric n x n matrix (same support as
// perm(X)); cached per n.
const std::set<Monomial>& det_support(int n);

// Acceptable = divides some support monomial of det(X).
bool is_acceptable(const Monomial& m, int n);

// Degree-k acceptable monomials, descending under `ord`.
std::vector<Monomial> acceptable_monomials(int n, int k,
                                           Order ord = Order::conca_lex);

enum class GeneratorKind { V, W, Hdeg3, AnnCo2 };

// The explicit annihilator generator families:
//   V      degree-2 annihilator of det  (monomials, diagonal permanents,
//          one-diagonal permanents, 4x4 hafnians)
//   W      degree-2 annihilator of perm (monomials, diagonal minors,
//          one-diagonal minors)
//   Hdeg3  the five degree-3 forms per 6x6 symmetric submatrix
//   AnnCo2 degree-2 annihilator of det under contraction
struct GeneratorSet {
  GeneratorKind kind;
  int n = 0;
  std::vector<Polynomial> members;
};

GeneratorSet build_generator_set(GeneratorKind kind, int n);
size_t generator_set_expected_size(GeneratorKind kind, int n);
std::string generator_kind_name(GeneratorKind kind);

enum class MonomialSpaceKind { minors, subpermanents, monhaf };

// Span of all k x k minors (M_k), all k x k sub-permanents (P_k), or the
// hafnian monomials (MonHaf, k = n/2), as an echelonized subspace.
GradedSubspace monomial_space(MonomialSpaceKind kind, const RingSpec& ring,
                              int k);

// dim M_k = C(n+1,k) C(n+1,k+1) / (n+1) (the Hilbert-sequence convention).
Int minor_space_dim(int n, int k);
// dim P_k = C(n,k) (C(n,k)+1) / 2.
Int subperm_space_dim(int n, int k);
// dim MonHaf_{2k} = (2k)! / (2^k k!).
Int monhaf_dim(int two_k);

// The hafnian monomials of the n x n symmetric matrix, n even, descending
// Conca-lex.
std::vector<Monomial> monhaf_monomials(int n);

}  // namespace apolar
