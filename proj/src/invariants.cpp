#include "apolar/invariants.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace apolar {

namespace {

void check_symmetric(const RingSpec& ring, const char* what) {
  if (ring.layout != Layout::symmetric)
    throw std::invalid_argument(std::string(what) +
                                " requires the symmetric layout");
}

// Calls f(sigma, parity) for every permutation of 1..t.
template <typename F>
void for_each_permutation(int t, F&& f) {
  std::vector<int> sigma(t);
  std::iota(sigma.begin(), sigma.end(), 1);
  // Track parity across next_permutation by recomputing inversions; t is
  // desk-scale (<= 8) so the quadratic count is irrelevant.
  do {
    int inv = 0;
    for (int i = 0; i < t; ++i)
      for (int j = i + 1; j < t; ++j)
        if (sigma[i] > sigma[j]) ++inv;
    f(sigma, inv % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

Monomial diagonal_product(const RingSpec& ring, const std::vector<int>& rows,
                          const std::vector<int>& cols,
                          const std::vector<int>& sigma) {
  Monomial m;
  for (size_t i = 0; i < sigma.size(); ++i) {
    VarId v = make_var(ring, rows[i], cols[sigma[i] - 1]);
    m = m.times(Monomial::var(var_rank(ring, v)));
  }
  return m;
}

std::vector<int> identity_selector(int n) {
  std::vector<int> s(n);
  std::iota(s.begin(), s.end(), 1);
  return s;
}

void check_selector(const RingSpec& ring, const SubmatrixSelector& sel) {
  if (sel.rows.size() != sel.cols.size())
    throw std::invalid_argument("selector rows/cols length mismatch");
  auto ok = [&](const std::vector<int>& v) {
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 1 || v[i] > ring.n) return false;
      if (i > 0 && v[i] <= v[i - 1]) return false;
    }
    return true;
  };
  if (!ok(sel.rows) || !ok(sel.cols))
    throw std::invalid_argument("selector indices must be strictly increasing in 1..n");
}

template <typename Weight>
Polynomial expansion(const RingSpec& ring, const std::vector<int>& rows,
                     const std::vector<int>& cols, Weight&& weight) {
  Polynomial out(ring);
  for_each_permutation(static_cast<int>(rows.size()),
                       [&](const std::vector<int>& sigma, int parity) {
                         Rat w = weight(sigma, parity);
                         if (w != 0)
                           out.add_term(diagonal_product(ring, rows, cols, sigma), w);
                       });
  return out;
}

}  // namespace

Polynomial det_poly(const RingSpec& ring) {
  auto all = identity_selector(ring.n);
  return expansion(ring, all, all,
                   [](const std::vector<int>&, int parity) { return Rat(parity); });
}

Polynomial perm_poly(const RingSpec& ring) {
  auto all = identity_selector(ring.n);
  return expansion(ring, all, all,
                   [](const std::vector<int>&, int) { return Rat(1); });
}

Polynomial minor_poly(const RingSpec& ring, const SubmatrixSelector& sel) {
  check_selector(ring, sel);
  return expansion(ring, sel.rows, sel.cols,
                   [](const std::vector<int>&, int parity) { return Rat(parity); });
}

Polynomial subperm_poly(const RingSpec& ring, const SubmatrixSelector& sel) {
  check_selector(ring, sel);
  return expansion(ring, sel.rows, sel.cols,
                   [](const std::vector<int>&, int) { return Rat(1); });
}

Polynomial immanant_poly(const RingSpec& ring, const Partition& lambda) {
  if (partition_weight(lambda) != ring.n)
    throw std::invalid_argument("immanant: partition must have weight n");
  std::map<Partition, Int> chi;
  for (const auto& cls : conjugacy_classes(ring.n))
    chi[cls.cycle_type] = irreducible_character(lambda, cls.cycle_type);
  auto all = identity_selector(ring.n);
  return expansion(ring, all, all, [&](const std::vector<int>& sigma, int) {
    return Rat(chi.at(cycle_type_of(sigma)));
  });
}

namespace {

// Enumerates perfect matchings of {1..n} as sorted pair lists.
void matchings_rec(std::vector<int>& free, std::vector<std::pair<int, int>>& acc,
                   std::vector<std::vector<std::pair<int, int>>>& out) {
  if (free.empty()) {
    out.push_back(acc);
    return;
  }
  int a = free.front();
  for (size_t i = 1; i < free.size(); ++i) {
    int b = free[i];
    std::vector<int> rest;
    for (size_t j = 1; j < free.size(); ++j)
      if (j != i) rest.push_back(free[j]);
    acc.push_back({a, b});
    matchings_rec(rest, acc, out);
    acc.pop_back();
  }
}

std::vector<std::vector<std::pair<int, int>>> perfect_matchings(int n) {
  std::vector<int> pts(n);
  std::iota(pts.begin(), pts.end(), 1);
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> acc;
  matchings_rec(pts, acc, out);
  return out;
}

}  // namespace

Polynomial hafnian_poly(const RingSpec& ring) {
  check_symmetric(ring, "hafnian");
  if (ring.n % 2 != 0)
    throw std::invalid_argument("hafnian requires an even matrix size");
  Polynomial out(ring);
  for (const auto& matching : perfect_matchings(ring.n)) {
    Monomial m;
    for (auto [a, b] : matching)
      m = m.times(Monomial::var(var_rank(ring, make_var(ring, a, b))));
    out.add_term(m, 1);
  }
  return out;
}

std::vector<Monomial> monhaf_monomials(int n) {
  RingSpec ring = sym_ring(n);
  Polynomial hf = hafnian_poly(ring);
  std::vector<Monomial> out;
  for (const auto& [m, c] : hf.terms()) out.push_back(m);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return order_less(Order::conca_lex, b, a);
  });
  return out;
}

const std::set<Monomial>& det_support(int n) {
  static std::map<int, std::set<Monomial>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    Polynomial det = det_poly(sym_ring(n));
    std::set<Monomial> s;
    for (const auto& [m, c] : det.terms()) s.insert(m);
    it = cache.emplace(n, std::move(s)).first;
  }
  return it->second;
}

bool is_acceptable(const Monomial& m, int n) {
  for (const auto& t : det_support(n))
    if (m.divides(t)) return true;
  return false;
}

std::vector<Monomial> acceptable_monomials(int n, int k, Order ord) {
  std::set<Monomial> found;
  for (const auto& t : det_support(n)) {
    // All degree-k divisors of t.
    std::vector<Monomial::Factor> current;
    auto rec = [&](auto&& self, size_t idx, int remaining) -> void {
      if (remaining == 0) {
        found.insert(Monomial(current));
        return;
      }
      if (idx == t.factors().size()) return;
      auto [v, e] = t.factors()[idx];
      int top = std::min<int>(e, remaining);
      for (int take = top; take >= 0; --take) {
        if (take > 0)
          current.push_back({v, static_cast<uint16_t>(take)});
        self(self, idx + 1, remaining - take);
        if (take > 0) current.pop_back();
      }
    };
    rec(rec, 0, k);
  }
  std::vector<Monomial> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return order_less(ord, b, a);
  });
  return out;
}

namespace {

template <typename F>
void for_each_combination(int n, int t, F&& f) {
  std::vector<int> c(t);
  std::iota(c.begin(), c.end(), 1);
  if (t > n) return;
  while (true) {
    f(c);
    int i = t - 1;
    while (i >= 0 && c[i] == n - t + i + 1) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < t; ++j) c[j] = c[j - 1] + 1;
  }
}

Polynomial poly_of_var(const RingSpec& ring, int i, int j) {
  return Polynomial::variable(ring, i, j);
}

}  // namespace

GeneratorSet build_generator_set(GeneratorKind kind, int n) {
  if (n < 2) throw std::invalid_argument("generator sets need n >= 2");
  if (kind == GeneratorKind::Hdeg3 && n < 6)
    throw std::invalid_argument("degree-3 generators appear only for n >= 6");
  RingSpec ring = sym_ring(n);
  GeneratorSet out{kind, n, {}};
  auto var = [&](int i, int j) { return poly_of_var(ring, i, j); };

  switch (kind) {
    case GeneratorKind::V:
    case GeneratorKind::W: {
      bool det_side = kind == GeneratorKind::V;
      Rat s = det_side ? 1 : -1;
      // (a) y_ii * y_ij, all i, j (j = i gives the diagonal square).
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          out.members.push_back(var(i, i) * var(i, j));
      // (b) y_ij^2 +- 2 y_ii y_jj.
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          out.members.push_back(var(i, j) * var(i, j) +
                                (var(i, i) * var(j, j)).scaled(2 * s));
      // (c) one-diagonal 2x2 permanents/minors: y_ii y_jl +- y_ij y_il.
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          if (j == i) continue;
          for (int l = j + 1; l <= n; ++l) {
            if (l == i) continue;
            out.members.push_back(var(i, i) * var(j, l) +
                                  (var(i, j) * var(i, l)).scaled(s));
          }
        }
      // (d) hafnians of the 4x4 symmetric submatrices (det side only).
      if (det_side)
        for_each_combination(n, 4, [&](const std::vector<int>& q) {
          out.members.push_back(var(q[0], q[1]) * var(q[2], q[3]) +
                                var(q[0], q[2]) * var(q[1], q[3]) +
                                var(q[0], q[3]) * var(q[1], q[2]));
        });
      break;
    }
    case GeneratorKind::Hdeg3: {
      // The five degree-3 forms attached to each 6x6 symmetric submatrix,
      // instantiated by order-preserving substitution of the sorted 6-subset.
      struct Term {
        int p[6];  // pairing of positions 1..6, flattened (a1,b1,a2,b2,a3,b3)
        int coeff;
      };
      using Shape = std::vector<Term>;
      static const std::vector<Shape> shapes = {
          // EIO - DJO - EHR + CJR + DHT - CIT
          {{{1, 5, 2, 4, 3, 6}, 1}, {{1, 4, 2, 5, 3, 6}, -1},
           {{1, 5, 2, 3, 4, 6}, -1}, {{1, 3, 2, 5, 4, 6}, 1},
           {{1, 4, 2, 3, 5, 6}, 1}, {{1, 3, 2, 4, 5, 6}, -1}},
          // DKN - DJO - CKQ + BOQ + CJR - BNR
          {{{1, 4, 2, 6, 3, 5}, 1}, {{1, 4, 2, 5, 3, 6}, -1},
           {{1, 3, 2, 6, 4, 5}, -1}, {{1, 2, 3, 6, 4, 5}, 1},
           {{1, 3, 2, 5, 4, 6}, 1}, {{1, 2, 3, 5, 4, 6}, -1}},
          // FIN - DJO - FHQ + BOQ + CJR - BNR + DHT - CIT
          {{{1, 6, 2, 4, 3, 5}, 1}, {{1, 4, 2, 5, 3, 6}, -1},
           {{1, 6, 2, 3, 4, 5}, -1}, {{1, 2, 3, 6, 4, 5}, 1},
           {{1, 3, 2, 5, 4, 6}, 1}, {{1, 2, 3, 5, 4, 6}, -1},
           {{1, 4, 2, 3, 5, 6}, 1}, {{1, 3, 2, 4, 5, 6}, -1}},
          // EKM - DJO - CKQ + BOQ - EHR + CJR + DHT - BMT
          {{{1, 5, 2, 6, 3, 4}, 1}, {{1, 4, 2, 5, 3, 6}, -1},
           {{1, 3, 2, 6, 4, 5}, -1}, {{1, 2, 3, 6, 4, 5}, 1},
           {{1, 5, 2, 3, 4, 6}, -1}, {{1, 3, 2, 5, 4, 6}, 1},
           {{1, 4, 2, 3, 5, 6}, 1}, {{1, 2, 3, 4, 5, 6}, -1}},
          // FJM - DJO - FHQ + BOQ + DHT - BMT
          {{{1, 6, 2, 5, 3, 4}, 1}, {{1, 4, 2, 5, 3, 6}, -1},
           {{1, 6, 2, 3, 4, 5}, -1}, {{1, 2, 3, 6, 4, 5}, 1},
           {{1, 4, 2, 3, 5, 6}, 1}, {{1, 2, 3, 4, 5, 6}, -1}},
      };
      for_each_combination(n, 6, [&](const std::vector<int>& q) {
        for (const auto& shape : shapes) {
          Polynomial f(ring);
          for (const auto& term : shape) {
            Monomial m;
            for (int pair = 0; pair < 3; ++pair) {
              int a = q[term.p[2 * pair] - 1];
              int b = q[term.p[2 * pair + 1] - 1];
              m = m.times(Monomial::var(var_rank(ring, make_var(ring, a, b))));
            }
            f.add_term(m, term.coeff);
          }
          out.members.push_back(f);
        }
      });
      break;
    }
    case GeneratorKind::AnnCo2: {
      // Degree-2 contraction annihilator of det: diagonal squares, diagonal
      // times same row/column, and the diagonal 2x2 permanents.
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          out.members.push_back(var(i, i) * var(i, j));
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          out.members.push_back(var(i, i) * var(j, j) + var(i, j) * var(i, j));
      break;
    }
  }
  if (out.members.size() != generator_set_expected_size(kind, n))
    throw std::logic_error("generator set size disagrees with the closed form");
  return out;
}

size_t generator_set_expected_size(GeneratorKind kind, int n) {
  Int nn = Int(n) * n;
  switch (kind) {
    case GeneratorKind::V:
      return to_ll(nn + binomial(n, 2) + n * binomial(n - 1, 2) + binomial(n, 4));
    case GeneratorKind::W:
      return to_ll(nn + binomial(n, 2) + n * binomial(n - 1, 2));
    case GeneratorKind::Hdeg3:
      return to_ll(5 * binomial(n, 6));
    case GeneratorKind::AnnCo2:
      return to_ll(nn + binomial(n, 2));
  }
  return 0;
}

std::string generator_kind_name(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::V: return "V";
    case GeneratorKind::W: return "W";
    case GeneratorKind::Hdeg3: return "Hdeg3";
    case GeneratorKind::AnnCo2: return "AnnCo2";
  }
  return "?";
}

Int minor_space_dim(int n, int k) {
  if (k == 0) return 1;
  return binomial(n + 1, k) * binomial(n + 1, k + 1) / (n + 1);
}

Int subperm_space_dim(int n, int k) {
  Int c = binomial(n, k);
  return c * (c + 1) / 2;
}

Int monhaf_dim(int two_k) {
  if (two_k % 2 != 0) throw std::invalid_argument("monhaf needs an even size");
  int k = two_k / 2;
  Int r = factorial(two_k) / factorial(k);
  for (int i = 0; i < k; ++i) r /= 2;
  return r;
}

GradedSubspace monomial_space(MonomialSpaceKind kind, const RingSpec& ring,
                              int k) {
  check_symmetric(ring, "monomial spaces");
  const int n = ring.n;
  if (k < 0 || k > n) throw std::out_of_range("slice degree out of range");
  if (kind == MonomialSpaceKind::monhaf) {
    if (n % 2 != 0 || k != n / 2)
      throw std::invalid_argument("MonHaf lives in degree n/2 of an even ring");
    std::vector<Polynomial> gens;
    for (const auto& m : monhaf_monomials(n))
      gens.push_back(Polynomial::monomial(ring, m));
    return GradedSubspace::span(ring, k, Order::conca_lex, gens);
  }
  std::vector<Polynomial> gens;
  for_each_combination(n, k, [&](const std::vector<int>& rows) {
    for_each_combination(n, k, [&](const std::vector<int>& cols) {
      SubmatrixSelector sel{rows, cols};
      gens.push_back(kind == MonomialSpaceKind::minors
                         ? minor_poly(ring, sel)
                         : subperm_poly(ring, sel));
    });
  });
  return GradedSubspace::span(ring, k, Order::conca_lex, gens);
}

}  // namespace apolar
