#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "apolar/invariants.hpp"

namespace apolar {

enum class Pairing { differentiation, contraction };
std::string pairing_name(Pairing p);
Pairing pairing_from_name(const std::string& s);

// The linear map S_k -> R_{d-k}, h -> h . F, over the monomial bases in
// descending Conca-lex order. Only rows with nonzero image are stored (a row
// is zero exactly when its monomial divides no term of F).
struct Catalecticant {
  RingSpec ring;
  int k = 0, d = 0;
  Pairing pairing = Pairing::differentiation;
  Int row_space_dim;  // dim S_k
  Int col_space_dim;  // dim R_{d-k}
  std::vector<Monomial> row_monomials;  // nonzero rows, descending Conca-lex
  std::vector<SparseVec> rows;          // columns labeled in first-seen order
  std::vector<Monomial> col_monomials;

  size_t rank() const;
  Rat entry(const Monomial& row, const Monomial& col) const;
  // The image polynomial h . F for stored row i.
  Polynomial row_polynomial(size_t i) const;
};

Catalecticant catalecticant(const Polynomial& F, int k, Pairing pairing);

// H(S/Ann F)_k = rank of the k-th catalecticant, k = 0..deg F.
struct HilbertSequence {
  std::vector<long long> values;
  long long length() const;
  long long max_value() const;
  bool palindromic() const;
};

HilbertSequence hilbert_sequence(const Polynomial& F, Pairing pairing);

// (Ann F)_k as an echelonized subspace of S_k.
GradedSubspace ann_slice(const Polynomial& F, int k, Pairing pairing,
                         Order ord = Order::conca_lex);

// Degree-k slice of the ideal generated by homogeneous `gens`.
GradedSubspace ideal_slice(const std::vector<Polynomial>& gens, int k,
                           const RingSpec& ring, Order ord = Order::conca_lex);

// Minimal generator count per degree: new annihilator dimensions not already
// generated below. Degrees run 1..min(up_to, deg F); the inevitable
// generators in degree deg F + 1 (the ideal contains all of S_{d+1}) are
// reported separately.
struct GeneratorProfile {
  std::map<int, long long> counts;      // degree -> minimal generator count
  std::optional<long long> socle_count; // degree deg F + 1, when computed
  int max_degree_with_generators() const;
};

GeneratorProfile minimal_generator_profile(const Polynomial& F, Pairing pairing,
                                           int up_to,
                                           bool include_socle = false);

// Degreewise check that `gens` generate the full apolar ideal of F.
struct VerifyReport {
  bool passed = false;
  // Generators that fail to annihilate F (distinct failure class).
  std::vector<size_t> non_annihilating;
  struct DegreeGap {
    int degree;
    long long ideal_dim;
    long long ann_dim;
  };
  std::vector<DegreeGap> gaps;  // degrees where ideal_dim < ann_dim
  std::vector<DegreeGap> checked;
};

VerifyReport verify_generator_set(const Polynomial& F,
                                  const std::vector<Polynomial>& gens,
                                  Pairing pairing, int max_degree = -1);

// Triangularity of the degree-k slice of (V) (det) or (W+) (perm):
//  (i) every unacceptable monomial lies in the slice;
// (ii) the reverse-lex leading monomials of the slice's echelon basis cover
//      all acceptable monomials that are not Conca/sub-permanent initial
//      monomials.
struct TriangularityReport {
  bool passed = false;
  std::vector<Monomial> unacceptable_failures;
  std::vector<Monomial> uncovered;       // acceptable non-initial, not led
  std::vector<Monomial> extra_leading;   // leading monomials outside the claim
};

TriangularityReport check_triangularity(FormKind form, int n, int k);

}  // namespace apolar
