#pragma once

#include <optional>
#include <string>

#include "apolar/engine.hpp"

namespace apolar {

// Lower-bound summary for one invariant. rs_bound = length / d with d the
// maximal minimal-generator degree; l_diff = max Hilbert value. The two are
// independent lower bounds and are never reconciled against each other.
struct RankReport {
  int n = 0;
  FormKind form = FormKind::det;
  Pairing pairing = Pairing::differentiation;
  long long length = 0;
  int max_gen_degree = 0;  // profile-derived d (socle excluded)
  std::optional<int> profile_truncated_at;
  Rat rs_bound;
  long long l_diff = 0;
  std::optional<long long> lt_bound;  // symmetric determinant only
  std::optional<int> lt_argmax;
};

RankReport rank_report(FormKind form, int n, Pairing pairing);

Rat rs_bound(const Polynomial& F, Pairing pairing);
long long l_diff(const Polynomial& F, Pairing pairing);

// The catalecticant + singular-locus bound for the symmetric determinant:
//   bound(t) = dim M_t + (n-t-1)(n-t)/2 + (t+1)(n-t-1) + 1.
long long lt_bound_det_at(int n, int t);

struct LtBound {
  long long value = 0;
  int argmax = 0;          // computed maximizer over 1 <= t <= n-1
  int claimed_argmax = 0;  // floor(n/2)
};

LtBound lt_bound_det(int n);

// dim of the rank <= n-t-1 locus used by the bound above.
long long sigma_dimension(int n, int t);

}  // namespace apolar
