#include "apolar/symgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "apolar/basis.hpp"
#include "apolar/echelon.hpp"
#include "apolar/invariants.hpp"

namespace apolar {

int partition_weight(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0);
}

std::string partition_name(const Partition& p) {
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s;
}

Partition conjugate_partition(const Partition& p) {
  Partition out;
  for (int i = 1; !p.empty() && i <= p[0]; ++i) {
    int cnt = 0;
    for (int part : p)
      if (part >= i) ++cnt;
    out.push_back(cnt);
  }
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition current;
  // Descending lexicographic: largest first part first.
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::vector<ConjugacyClass> conjugacy_classes(int n) {
  std::vector<Partition> types = partitions_of(n);
  std::sort(types.begin(), types.end());  // ascending lex
  std::vector<ConjugacyClass> out;
  Int nfact = factorial(n);
  for (const auto& t : types) {
    std::map<int, int> mult;
    for (int part : t) ++mult[part];
    Int denom = 1;
    for (const auto& [j, m] : mult) {
      for (int i = 0; i < m; ++i) denom *= j;
      denom *= factorial(m);
    }
    out.push_back({t, nfact / denom});
  }
  return out;
}

Perm class_representative(const Partition& cycle_type) {
  int n = partition_weight(cycle_type);
  Perm sigma(n);
  std::iota(sigma.begin(), sigma.end(), 1);
  int next = 1;
  for (int len : cycle_type) {
    // Cycle (next, next+1, ..., next+len-1).
    for (int i = 0; i < len; ++i)
      sigma[next - 1 + i] = next + (i + 1) % len;
    next += len;
  }
  return sigma;
}

Partition cycle_type_of(const Perm& sigma) {
  int n = static_cast<int>(sigma.size());
  std::vector<bool> seen(n, false);
  Partition type;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = sigma[j] - 1;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

namespace {

// Murnaghan-Nakayama via the abacus: a border strip of size r is removable
// exactly when some beta-number b has b - r >= 0 not among the beta-numbers;
// the sign is (-1)^{number of beta-numbers strictly between}.
Int mn_value(const std::vector<int>& beta, std::vector<int> rho,
             std::map<std::pair<std::vector<int>, std::vector<int>>, Int>& memo);

Int mn_recurse(const std::vector<int>& beta, std::vector<int> rho,
               std::map<std::pair<std::vector<int>, std::vector<int>>, Int>& memo) {
  if (rho.empty()) return 1;
  int r = rho.back();
  rho.pop_back();
  Int total = 0;
  for (size_t i = 0; i < beta.size(); ++i) {
    int target = beta[i] - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int crossed = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++crossed;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.rbegin(), nb.rend());
    Int sub = mn_value(nb, rho, memo);
    total += (crossed % 2 == 0) ? sub : -sub;
  }
  return total;
}

Int mn_value(const std::vector<int>& beta, std::vector<int> rho,
             std::map<std::pair<std::vector<int>, std::vector<int>>, Int>& memo) {
  auto key = std::make_pair(beta, rho);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Int v = mn_recurse(beta, std::move(rho), memo);
  memo[key] = v;
  return memo[key];
}

}  // namespace

Int irreducible_character(const Partition& lambda, const Partition& cycle_type) {
  if (partition_weight(lambda) != partition_weight(cycle_type))
    throw std::invalid_argument(
        "character: partition and cycle type have different weights");
  std::vector<int> beta;
  int m = static_cast<int>(lambda.size());
  for (int i = 0; i < m; ++i) beta.push_back(lambda[i] + (m - 1 - i));
  std::vector<int> rho(cycle_type.begin(), cycle_type.end());
  std::sort(rho.begin(), rho.end());  // consume largest parts first
  static thread_local std::map<std::pair<std::vector<int>, std::vector<int>>, Int>
      memo;
  return mn_value(beta, rho, memo);
}

CharacterVector irreducible_character_vector(const Partition& lambda) {
  int n = partition_weight(lambda);
  CharacterVector chi{n, {}};
  for (const auto& cls : conjugacy_classes(n))
    chi.values.push_back(irreducible_character(lambda, cls.cycle_type));
  return chi;
}

Rat character_inner(const CharacterVector& a, const CharacterVector& b) {
  if (a.n != b.n) throw std::invalid_argument("character inner: size mismatch");
  auto classes = conjugacy_classes(a.n);
  Int sum = 0;
  for (size_t i = 0; i < classes.size(); ++i)
    sum += classes[i].size * a.values[i] * b.values[i];
  return Rat(sum) / Rat(factorial(a.n));
}

Monomial act_on_monomial(const RingSpec& ring, const Perm& sigma,
                         const Monomial& m) {
  Perm inv(sigma.size());
  for (size_t i = 0; i < sigma.size(); ++i) inv[sigma[i] - 1] = static_cast<int>(i) + 1;
  std::vector<Monomial::Factor> out;
  for (const auto& [rank, exp] : m.factors()) {
    VarId v = var_of_rank(ring, rank);
    VarId w = make_var(ring, inv[v.row - 1], inv[v.col - 1]);
    out.push_back({static_cast<uint16_t>(var_rank(ring, w)), exp});
  }
  return Monomial(std::move(out));
}

Polynomial act_on_polynomial(const Perm& sigma, const Polynomial& p) {
  if (static_cast<int>(sigma.size()) != p.ring().n)
    throw std::invalid_argument("permutation size does not match the matrix");
  Polynomial out(p.ring());
  for (const auto& [m, c] : p.terms())
    out.add_term(act_on_monomial(p.ring(), sigma, m), c);
  return out;
}

CharacterVector monomial_space_character(const std::vector<Monomial>& monomials,
                                         const RingSpec& ring, int n) {
  std::set<Monomial> universe(monomials.begin(), monomials.end());
  CharacterVector chi{n, {}};
  for (const auto& cls : conjugacy_classes(n)) {
    Perm rep = class_representative(cls.cycle_type);
    Int fixed = 0;
    for (const auto& m : monomials) {
      Monomial image = act_on_monomial(ring, rep, m);
      if (!universe.count(image))
        throw std::invalid_argument(
            "monomial space is not stable under the action");
      if (image == m) ++fixed;
    }
    chi.values.push_back(fixed);
  }
  return chi;
}

std::map<Partition, long> decompose_character(const CharacterVector& chi) {
  std::map<Partition, long> out;
  for (const auto& lambda : partitions_of(chi.n)) {
    Rat mult = character_inner(chi, irreducible_character_vector(lambda));
    if (mult.get_den() != 1 || mult < 0)
      throw std::invalid_argument("input vector is not a character");
    long m = static_cast<long>(mult.get_num().get_si());
    if (m != 0) out[lambda] = m;
  }
  return out;
}

PhiPsiMaps phi_psi_maps(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("hafnian maps need an even matrix size");
  RingSpec ring = sym_ring(n);
  std::vector<Monomial> haf = monhaf_monomials(n);
  Polynomial perm = perm_poly(ring);
  Polynomial det = det_poly(ring);

  PhiPsiMaps out;
  out.n = n;
  out.monhaf_dim = haf.size();

  BasisIndex target(ring, n / 2, Order::conca_lex);
  auto run = [&](const Polynomial& F, size_t& rank_out, size_t& ker_out,
                 std::vector<Polynomial>& kernel_basis) {
    // Augment each row with an identity tag; rows that reduce to zero on the
    // image side leave the kernel combination in the tag columns.
    uint32_t width = static_cast<uint32_t>(target.size());
    Echelon ech;
    GradedSubspace kernel(ring, n / 2, Order::conca_lex);
    for (size_t i = 0; i < haf.size(); ++i) {
      Polynomial image = diff_apply(
          Polynomial::monomial(ring, haf[i]), F);
      SparseVec v;
      for (const auto& [m, c] : image.terms())
        v.emplace_back(target.position(m), c);
      std::sort(v.begin(), v.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      v.emplace_back(width + static_cast<uint32_t>(i), Rat(1));
      SparseVec reduced = ech.reduce(std::move(v));
      if (reduced.empty() || reduced.front().first >= width) {
        Polynomial combo(ring);
        for (const auto& [pos, c] : reduced)
          combo.add_term(haf[pos - width], c);
        kernel.insert(combo);
      } else {
        ech.insert(std::move(reduced));
      }
    }
    kernel.finalize();
    rank_out = haf.size() - kernel.dim();
    ker_out = kernel.dim();
    kernel_basis = kernel.basis();
  };

  run(perm, out.phi_rank, out.phi_kernel_dim, out.phi_kernel_basis);
  run(det, out.psi_rank, out.psi_kernel_dim, out.psi_kernel_basis);
  return out;
}

}  // namespace apolar
