#include "apolar/engine.hpp"

#include <algorithm>
#include <unordered_map>

#include "apolar/combinatorics.hpp"

namespace apolar {

std::string pairing_name(Pairing p) {
  return p == Pairing::differentiation ? "diff" : "contract";
}

Pairing pairing_from_name(const std::string& s) {
  if (s == "diff" || s == "differentiation") return Pairing::differentiation;
  if (s == "contract" || s == "contraction") return Pairing::contraction;
  throw std::invalid_argument("unknown pairing: " + s);
}

namespace {

Polynomial apply_pairing(Pairing pairing, const Polynomial& h,
                         const Polynomial& F) {
  return pairing == Pairing::differentiation ? diff_apply(h, F)
                                             : contract_apply(h, F);
}

void check_form(const Polynomial& F, const char* what) {
  if (F.is_zero())
    throw std::invalid_argument(std::string(what) + ": zero polynomial");
  if (!F.is_homogeneous())
    throw std::invalid_argument(std::string(what) + ": inhomogeneous input");
}

// Degree-k monomials with a nonzero image under h -> h.F are exactly the
// degree-k divisors of the terms of F; everything else maps to zero.
std::vector<Monomial> nonzero_row_monomials(const Polynomial& F, int k) {
  std::set<Monomial> found;
  std::vector<Monomial::Factor> current;
  for (const auto& [t, c] : F.terms()) {
    auto rec = [&](auto&& self, size_t idx, int remaining) -> void {
      if (remaining == 0) {
        found.insert(Monomial(current));
        return;
      }
      if (idx == t.factors().size()) return;
      auto [v, e] = t.factors()[idx];
      for (int take = std::min<int>(e, remaining); take >= 0; --take) {
        if (take > 0) current.push_back({v, static_cast<uint16_t>(take)});
        self(self, idx + 1, remaining - take);
        if (take > 0) current.pop_back();
      }
    };
    rec(rec, 0, k);
  }
  std::vector<Monomial> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return order_less(Order::conca_lex, b, a);
  });
  return out;
}

}  // namespace

size_t Catalecticant::rank() const {
  return sparse_rank(rows);
}

Rat Catalecticant::entry(const Monomial& row, const Monomial& col) const {
  for (size_t i = 0; i < row_monomials.size(); ++i) {
    if (!(row_monomials[i] == row)) continue;
    for (const auto& [pos, c] : rows[i])
      if (col_monomials[pos] == col) return c;
    return 0;
  }
  return 0;
}

Polynomial Catalecticant::row_polynomial(size_t i) const {
  Polynomial p(ring);
  for (const auto& [pos, c] : rows[i]) p.add_term(col_monomials[pos], c);
  return p;
}

Catalecticant catalecticant(const Polynomial& F, int k, Pairing pairing) {
  check_form(F, "catalecticant");
  int d = F.degree();
  if (k < 0 || k > d) throw std::out_of_range("catalecticant degree out of range");

  Catalecticant cat;
  cat.ring = F.ring();
  cat.k = k;
  cat.d = d;
  cat.pairing = pairing;
  cat.row_space_dim = graded_dimension(F.ring(), k);
  cat.col_space_dim = graded_dimension(F.ring(), d - k);
  cat.row_monomials = nonzero_row_monomials(F, k);

  std::unordered_map<Monomial, uint32_t, MonomialHash> col_ids;
  for (const auto& h : cat.row_monomials) {
    Polynomial image = apply_pairing(pairing, Polynomial::monomial(F.ring(), h), F);
    SparseVec row;
    row.reserve(image.term_count());
    for (const auto& [m, c] : image.terms()) {
      auto [it, fresh] =
          col_ids.emplace(m, static_cast<uint32_t>(col_ids.size()));
      if (fresh) cat.col_monomials.push_back(m);
      row.emplace_back(it->second, c);
    }
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    cat.rows.push_back(std::move(row));
  }
  return cat;
}

long long HilbertSequence::length() const {
  long long s = 0;
  for (long long v : values) s += v;
  return s;
}

long long HilbertSequence::max_value() const {
  long long m = 0;
  for (long long v : values) m = std::max(m, v);
  return m;
}

bool HilbertSequence::palindromic() const {
  for (size_t i = 0, j = values.size(); i < j; ++i, --j)
    if (values[i] != values[j - 1]) return false;
  return true;
}

HilbertSequence hilbert_sequence(const Polynomial& F, Pairing pairing) {
  check_form(F, "hilbert_sequence");
  HilbertSequence h;
  int d = F.degree();
  for (int k = 0; k <= d; ++k)
    h.values.push_back(static_cast<long long>(catalecticant(F, k, pairing).rank()));
  return h;
}

GradedSubspace ann_slice(const Polynomial& F, int k, Pairing pairing, Order ord) {
  check_form(F, "ann_slice");
  GradedSubspace out(F.ring(), k, ord);
  if (k > F.degree()) {
    // Everything annihilates F above its degree.
    for (const auto& m : out.ambient().monomials())
      out.insert_vec({{out.ambient().position(m), Rat(1)}});
    out.finalize();
    return out;
  }

  Catalecticant cat = catalecticant(F, k, pairing);
  std::set<Monomial> nonzero(cat.row_monomials.begin(), cat.row_monomials.end());

  // Monomials with zero image are annihilator members outright.
  std::vector<SparseVec> kernel;
  for (const auto& m : out.ambient().monomials())
    if (!nonzero.count(m)) kernel.push_back({{out.ambient().position(m), Rat(1)}});

  // For the rest, run the image rows augmented with identity tags; rows that
  // reduce to zero on the image side leave a kernel combination in the tags.
  uint32_t width = 0;
  for (const auto& row : cat.rows)
    for (const auto& [pos, c] : row) width = std::max(width, pos + 1);
  Echelon ech;
  for (size_t i = 0; i < cat.rows.size(); ++i) {
    SparseVec v = cat.rows[i];
    v.emplace_back(width + out.ambient().position(cat.row_monomials[i]), Rat(1));
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec reduced = ech.reduce(std::move(v));
    if (reduced.empty() || reduced.front().first >= width) {
      SparseVec combo;
      for (const auto& [pos, c] : reduced) combo.emplace_back(pos - width, c);
      kernel.push_back(std::move(combo));
    } else {
      ech.insert(std::move(reduced));
    }
  }
  std::sort(kernel.begin(), kernel.end(),
            [](const SparseVec& a, const SparseVec& b) {
              if (a.front().first != b.front().first)
                return a.front().first < b.front().first;
              return a.size() < b.size();
            });
  for (auto& v : kernel) out.insert_vec(std::move(v));
  out.finalize();
  return out;
}

GradedSubspace ideal_slice(const std::vector<Polynomial>& gens, int k,
                           const RingSpec& ring, Order ord) {
  GradedSubspace out(ring, k, ord);
  std::vector<SparseVec> vecs;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous())
      throw std::invalid_argument("ideal_slice: generators must be homogeneous");
    int dg = g.degree();
    if (dg > k) continue;
    for (const auto& m : monomial_basis(ring, k - dg)) {
      SparseVec v;
      v.reserve(g.term_count());
      for (const auto& [gm, c] : g.terms())
        v.emplace_back(out.ambient().position(m.times(gm)), c);
      std::sort(v.begin(), v.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      vecs.push_back(std::move(v));
    }
  }
  std::sort(vecs.begin(), vecs.end(), [](const SparseVec& a, const SparseVec& b) {
    if (a.front().first != b.front().first)
      return a.front().first < b.front().first;
    return a.size() < b.size();
  });
  for (auto& v : vecs) out.insert_vec(std::move(v));
  out.finalize();
  return out;
}

int GeneratorProfile::max_degree_with_generators() const {
  int d = 0;
  for (const auto& [deg, cnt] : counts)
    if (cnt > 0) d = std::max(d, deg);
  return d;
}

GeneratorProfile minimal_generator_profile(const Polynomial& F, Pairing pairing,
                                           int up_to, bool include_socle) {
  check_form(F, "minimal_generator_profile");
  const int d = F.degree();
  const int cap = std::min(up_to, d);
  GeneratorProfile out;

  GradedSubspace prev;  // annihilator slice at degree k-1
  bool have_prev = false;
  for (int k = 1; k <= cap; ++k) {
    GradedSubspace ann = ann_slice(F, k, pairing);
    long long ideal_dim = 0;
    if (have_prev && prev.dim() > 0) {
      // The ideal generated by all annihilator elements of degree < k meets
      // degree k in S_1 * Ann_{k-1}, since Ann_{k-1} already contains every
      // lower slice times S_1.
      GradedSubspace ideal = ideal_slice(prev.basis(), k, F.ring());
      ideal_dim = static_cast<long long>(ideal.dim());
    }
    out.counts[k] = static_cast<long long>(ann.dim()) - ideal_dim;
    prev = std::move(ann);
    have_prev = true;
  }
  if (include_socle && cap == d && have_prev) {
    GradedSubspace top = ideal_slice(prev.basis(), d + 1, F.ring());
    out.socle_count =
        to_ll(graded_dimension(F.ring(), d + 1)) - static_cast<long long>(top.dim());
  }
  return out;
}

VerifyReport verify_generator_set(const Polynomial& F,
                                  const std::vector<Polynomial>& gens,
                                  Pairing pairing, int max_degree) {
  check_form(F, "verify_generator_set");
  VerifyReport report;
  for (size_t i = 0; i < gens.size(); ++i)
    if (!apply_pairing(pairing, gens[i], F).is_zero())
      report.non_annihilating.push_back(i);
  if (!report.non_annihilating.empty()) return report;

  const int d = F.degree();
  const int hi = max_degree < 0 ? d : std::min(max_degree, d);
  for (int k = 2; k <= hi; ++k) {
    long long ideal_dim =
        static_cast<long long>(ideal_slice(gens, k, F.ring()).dim());
    long long ann_dim = static_cast<long long>(
        to_ll(graded_dimension(F.ring(), k)) -
        static_cast<long long>(catalecticant(F, k, pairing).rank()));
    report.checked.push_back({k, ideal_dim, ann_dim});
    if (ideal_dim != ann_dim) report.gaps.push_back({k, ideal_dim, ann_dim});
  }
  report.passed = report.gaps.empty();
  return report;
}

TriangularityReport check_triangularity(FormKind form, int n, int k) {
  if (k < 2 || k > n) throw std::out_of_range("triangularity degree out of range");
  RingSpec ring = sym_ring(n);

  std::vector<Polynomial> gens;
  if (form == FormKind::det) {
    gens = build_generator_set(GeneratorKind::V, n).members;
  } else {
    gens = build_generator_set(GeneratorKind::W, n).members;
    if (n >= 6)
      for (auto& g : build_generator_set(GeneratorKind::Hdeg3, n).members)
        gens.push_back(std::move(g));
  }
  GradedSubspace slice = ideal_slice(gens, k, ring, Order::reverse_conca_lex);

  TriangularityReport report;
  std::set<Monomial> leading;
  for (const auto& m : slice.leading_monomials()) leading.insert(m);

  std::set<Monomial> initials;
  for (const auto& m : form == FormKind::det ? conca_monomials(n, k)
                                             : subperm_initial_monomials(n, k))
    initials.insert(m);

  std::set<Monomial> claimed;  // U_k plus the acceptable non-initial set
  for (const auto& m : monomial_basis(ring, k)) {
    bool acceptable = is_acceptable(m, n);
    if (!acceptable) {
      claimed.insert(m);
      if (!slice.contains(Polynomial::monomial(ring, m)))
        report.unacceptable_failures.push_back(m);
    } else if (!initials.count(m)) {
      claimed.insert(m);
      if (!leading.count(m)) report.uncovered.push_back(m);
    }
  }
  for (const auto& m : leading)
    if (!claimed.count(m)) report.extra_leading.push_back(m);

  report.passed = report.unacceptable_failures.empty() &&
                  report.uncovered.empty() && report.extra_leading.empty();
  return report;
}

}  // namespace apolar
