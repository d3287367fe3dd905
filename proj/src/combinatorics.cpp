#include "apolar/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <unordered_map>

namespace apolar {

Int catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan of negative index");
  return binomial(2 * n, n) / (n + 1);
}

Int narayana(int m, int t) {
  if (m < 1 || t < 1 || t > m) throw std::out_of_range("narayana index range");
  return binomial(m, t) * binomial(m, t - 1) / m;
}

std::vector<DosetMinor> enumerate_doset_minors(int n, int t) {
  if (t < 1 || t > n) throw std::out_of_range("doset minor size range");
  std::vector<DosetMinor> out;
  std::vector<int> a(t), b(t);
  // Interleaved choice keeps the doset condition a_i <= b_i by construction.
  std::function<void(int)> rec = [&](int i) {
    if (i == t) {
      out.push_back({a, b});
      return;
    }
    int amin = i == 0 ? 1 : a[i - 1] + 1;
    for (a[i] = amin; a[i] <= n; ++a[i]) {
      int bmin = std::max(a[i], i == 0 ? 1 : b[i - 1] + 1);
      for (b[i] = bmin; b[i] <= n; ++b[i]) rec(i + 1);
    }
  };
  rec(0);
  return out;
}

Monomial flag_monomial(const RingSpec& ring, const DosetMinor& dm) {
  Monomial m;
  for (size_t i = 0; i < dm.rows.size(); ++i)
    m = m.times(
        Monomial::var(var_rank(ring, make_var(ring, dm.rows[i], dm.cols[i]))));
  return m;
}

int DyckPath::corner_count() const {
  int c = 0;
  for (size_t i = 1; i < steps.size(); ++i)
    if (steps[i - 1] && !steps[i]) ++c;
  return c;
}

std::vector<DyckPath> enumerate_dyck(int n) {
  std::vector<DyckPath> out;
  std::vector<bool> steps;
  std::function<void(int, int)> rec = [&](int x, int y) {
    if (x == n && y == n) {
      out.push_back({steps});
      return;
    }
    if (x < n) {
      steps.push_back(true);
      rec(x + 1, y);
      steps.pop_back();
    }
    if (y < x && y < n) {
      steps.push_back(false);
      rec(x, y + 1);
      steps.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

Int count_dyck(int n) { return catalan(n); }

Int count_dyck_with_corners(int n, int t) {
  Int c = 0;
  for (const auto& p : enumerate_dyck(n))
    if (p.corner_count() == t) ++c;
  return c;
}

namespace {

// Initial monomials of the span of the k x k minors (resp. sub-permanents):
// the reverse-lex minimal monomials of the echelonized space. Because the
// annihilator slice is the perp of this span under the diagonal apolarity
// pairing, pivot/free-position duality makes these exactly the monomials
// that are NOT reverse-lex leading monomials of the annihilator - the
// partition the triangularity argument needs. For the determinant the set
// coincides with the doset flag monomials (checked in the tests); for the
// permanent the sorted-matching initials of single sub-permanents undercount
// at some degrees (distinct selectors can share an initial, e.g. [1,3|2,4]
// and [1,4|2,3] both lead at y12*y34), so span combinations contribute the
// rest.
std::vector<Monomial> initial_monomials(int n, int k, FormKind form) {
  RingSpec ring = sym_ring(n);
  GradedSubspace space = monomial_space(form == FormKind::det
                                            ? MonomialSpaceKind::minors
                                            : MonomialSpaceKind::subpermanents,
                                        ring, k);
  // Re-echelonize with positions ascending in the reverse order, so pivots
  // sit at reverse-lex minimal monomials.
  std::vector<Monomial> basis = monomial_basis(ring, k, Order::reverse_conca_lex);
  std::reverse(basis.begin(), basis.end());
  std::unordered_map<Monomial, uint32_t, MonomialHash> pos;
  pos.reserve(basis.size() * 2);
  for (uint32_t i = 0; i < basis.size(); ++i) pos.emplace(basis[i], i);
  Echelon ech;
  for (const auto& p : space.basis()) {
    SparseVec v;
    v.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) v.emplace_back(pos.at(m), c);
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    ech.insert(std::move(v));
  }
  std::vector<Monomial> out;
  out.reserve(ech.rank());
  for (const auto& [pivot, row] : ech.rows()) out.push_back(basis[pivot]);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return order_less(Order::conca_lex, b, a);
  });
  return out;
}

const std::vector<Monomial>& initial_cache(int n, int k, FormKind form) {
  static std::map<std::tuple<int, int, int>, std::vector<Monomial>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(n, k, static_cast<int>(form));
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, initial_monomials(n, k, form)).first;
  return it->second;
}

}  // namespace

std::vector<Monomial> conca_monomials(int n, int k) {
  return initial_cache(n, k, FormKind::det);
}

std::vector<Monomial> subperm_initial_monomials(int n, int k) {
  return initial_cache(n, k, FormKind::perm);
}

MonomialClass classify_monomial(const Monomial& m, FormKind form, int n) {
  if (m.degree() == 0)
    throw std::invalid_argument("classify_monomial: degree must be positive");
  if (!is_acceptable(m, n)) return MonomialClass::unacceptable;
  const auto& initials = initial_cache(n, m.degree(), form);
  if (std::find(initials.begin(), initials.end(), m) != initials.end())
    return MonomialClass::conca_initial;
  return MonomialClass::acceptable_non_initial;
}

std::pair<std::vector<int>, std::vector<int>> pair_notation(
    const RingSpec& ring, const Monomial& m) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [rank, exp] : m.factors()) {
    VarId v = var_of_rank(ring, rank);
    for (int i = 0; i < exp; ++i) pairs.push_back({v.row, v.col});
  }
  std::sort(pairs.begin(), pairs.end());
  std::pair<std::vector<int>, std::vector<int>> out;
  for (auto [a, b] : pairs) {
    out.first.push_back(a);
    out.second.push_back(b);
  }
  return out;
}

std::optional<std::pair<int, int>> find_reversal_pair(
    const std::vector<int>& cols) {
  for (size_t i = 0; i < cols.size(); ++i)
    for (size_t j = i + 1; j < cols.size(); ++j)
      if (cols[i] >= cols[j]) return std::make_pair(cols[i], cols[j]);
  return std::nullopt;
}

}  // namespace apolar
