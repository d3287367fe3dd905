#include "apolar/ranks.hpp"

namespace apolar {

Rat rs_bound(const Polynomial& F, Pairing pairing) {
  HilbertSequence h = hilbert_sequence(F, pairing);
  GeneratorProfile profile = minimal_generator_profile(F, pairing, F.degree());
  int d = profile.max_degree_with_generators();
  if (d == 0) throw std::logic_error("annihilator has no generators below the socle");
  return Rat(static_cast<long>(h.length())) / d;
}

long long l_diff(const Polynomial& F, Pairing pairing) {
  return hilbert_sequence(F, pairing).max_value();
}

long long sigma_dimension(int n, int t) {
  return static_cast<long long>(n - t - 1) * (n - t) / 2 +
         static_cast<long long>(t + 1) * (n - t - 1);
}

long long lt_bound_det_at(int n, int t) {
  if (t < 1 || t > n - 1) throw std::out_of_range("lt bound needs 1 <= t <= n-1");
  return to_ll(minor_space_dim(n, t)) + sigma_dimension(n, t) + 1;
}

LtBound lt_bound_det(int n) {
  LtBound out;
  out.claimed_argmax = n / 2;
  for (int t = 1; t <= n - 1; ++t) {
    long long v = lt_bound_det_at(n, t);
    if (v > out.value) {
      out.value = v;
      out.argmax = t;
    }
  }
  return out;
}

RankReport rank_report(FormKind form, int n, Pairing pairing) {
  RingSpec ring = sym_ring(n);
  Polynomial F = form == FormKind::det ? det_poly(ring) : perm_poly(ring);
  HilbertSequence h = hilbert_sequence(F, pairing);
  // Full annihilator slices above degree 3 stop being desk-scale at n >= 6;
  // the truncation is recorded in the report.
  int cap = n <= 5 ? n : 3;
  GeneratorProfile profile = minimal_generator_profile(F, pairing, cap);

  RankReport r;
  r.n = n;
  r.form = form;
  r.pairing = pairing;
  r.length = h.length();
  r.max_gen_degree = profile.max_degree_with_generators();
  r.profile_truncated_at = cap < n ? std::optional<int>(cap) : std::nullopt;
  r.rs_bound = Rat(static_cast<long>(r.length)) / r.max_gen_degree;
  r.l_diff = h.max_value();
  if (form == FormKind::det && pairing == Pairing::differentiation && n >= 2) {
    LtBound lt = lt_bound_det(n);
    r.lt_bound = lt.value;
    r.lt_argmax = lt.argmax;
  }
  return r;
}

}  // namespace apolar
