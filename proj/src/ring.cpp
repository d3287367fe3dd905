#include "apolar/ring.hpp"

#include <algorithm>
#include <functional>

namespace apolar {

RingSpec sym_ring(int n, Flavor flavor) {
  if (n < 1) throw std::invalid_argument("matrix size must be >= 1");
  return RingSpec{n, Layout::symmetric, flavor};
}

RingSpec gen_ring(int n, Flavor flavor) {
  if (n < 1) throw std::invalid_argument("matrix size must be >= 1");
  return RingSpec{n, Layout::generic, flavor};
}

VarId make_var(const RingSpec& ring, int row, int col) {
  if (row < 1 || row > ring.n || col < 1 || col > ring.n)
    throw std::out_of_range("variable index outside 1.." +
                            std::to_string(ring.n));
  if (ring.layout == Layout::symmetric && row > col) std::swap(row, col);
  return VarId{row, col};
}

int var_rank(const RingSpec& ring, VarId v) {
  int i = v.row, j = v.col;
  if (ring.layout == Layout::symmetric) {
    // Row-major upper triangle: rows 1..i-1 contribute n-a+1 entries each.
    return (i - 1) * (2 * ring.n - i + 2) / 2 + (j - i);
  }
  return (i - 1) * ring.n + (j - 1);
}

VarId var_of_rank(const RingSpec& ring, int rank) {
  if (rank < 0 || rank >= ring.var_count())
    throw std::out_of_range("variable rank out of range");
  if (ring.layout == Layout::generic)
    return VarId{rank / ring.n + 1, rank % ring.n + 1};
  int i = 1;
  while (rank >= ring.n - i + 1) {
    rank -= ring.n - i + 1;
    ++i;
  }
  return VarId{i, i + rank};
}

Monomial::Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
  size_t w = 0;
  for (size_t r = 0; r < factors_.size(); ++r) {
    if (factors_[r].second == 0) continue;
    if (w > 0 && factors_[w - 1].first == factors_[r].first) {
      factors_[w - 1].second =
          static_cast<uint16_t>(factors_[w - 1].second + factors_[r].second);
    } else {
      factors_[w++] = factors_[r];
    }
  }
  factors_.resize(w);
  for (auto& [v, e] : factors_) degree_ += e;
}

Monomial Monomial::var(int rank, int exp) {
  if (exp <= 0) return Monomial();
  return Monomial({{static_cast<uint16_t>(rank), static_cast<uint16_t>(exp)}});
}

int Monomial::exponent_of(int rank) const {
  for (const auto& [v, e] : factors_)
    if (v == rank) return e;
  return 0;
}

bool Monomial::divides(const Monomial& m) const {
  size_t j = 0;
  for (const auto& [v, e] : factors_) {
    while (j < m.factors_.size() && m.factors_[j].first < v) ++j;
    if (j == m.factors_.size() || m.factors_[j].first != v ||
        m.factors_[j].second < e)
      return false;
  }
  return true;
}

Monomial Monomial::times(const Monomial& m) const {
  std::vector<Factor> out;
  out.reserve(factors_.size() + m.factors_.size());
  size_t i = 0, j = 0;
  while (i < factors_.size() || j < m.factors_.size()) {
    if (j == m.factors_.size() ||
        (i < factors_.size() && factors_[i].first < m.factors_[j].first)) {
      out.push_back(factors_[i++]);
    } else if (i == factors_.size() ||
               m.factors_[j].first < factors_[i].first) {
      out.push_back(m.factors_[j++]);
    } else {
      out.push_back({factors_[i].first,
                     static_cast<uint16_t>(factors_[i].second +
                                           m.factors_[j].second)});
      ++i, ++j;
    }
  }
  Monomial r;
  r.factors_ = std::move(out);
  r.degree_ = degree_ + m.degree_;
  return r;
}

Monomial Monomial::divide_into(const Monomial& m) const {
  std::vector<Factor> out;
  size_t i = 0;
  for (const auto& [v, e] : m.factors_) {
    uint16_t sub = 0;
    while (i < factors_.size() && factors_[i].first < v) ++i;
    if (i < factors_.size() && factors_[i].first == v) sub = factors_[i].second;
    if (sub > e) throw std::invalid_argument("monomial does not divide");
    if (e > sub) out.push_back({v, static_cast<uint16_t>(e - sub)});
  }
  Monomial r;
  r.factors_ = std::move(out);
  r.degree_ = m.degree_ - degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  std::vector<Factor> out;
  size_t i = 0, j = 0;
  while (i < a.factors_.size() || j < b.factors_.size()) {
    if (j == b.factors_.size() ||
        (i < a.factors_.size() && a.factors_[i].first < b.factors_[j].first)) {
      out.push_back(a.factors_[i++]);
    } else if (i == a.factors_.size() ||
               b.factors_[j].first < a.factors_[i].first) {
      out.push_back(b.factors_[j++]);
    } else {
      out.push_back({a.factors_[i].first,
                     std::max(a.factors_[i].second, b.factors_[j].second)});
      ++i, ++j;
    }
  }
  Monomial r;
  r.factors_ = std::move(out);
  for (auto& [v, e] : r.factors_) r.degree_ += e;
  return r;
}

size_t MonomialHash::operator()(const Monomial& m) const {
  size_t h = 1469598103934665603ull;
  for (const auto& [v, e] : m.factors()) {
    h ^= (static_cast<size_t>(v) << 16) | e;
    h *= 1099511628211ull;
  }
  return h;
}

Polynomial::Polynomial(RingSpec ring, std::map<Monomial, Rat> terms)
    : ring_(ring), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

Rat Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    if (d == -1) d = m.degree();
    if (m.degree() != d) return false;
  }
  return true;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void require_same_universe(const Polynomial& a, const Polynomial& b,
                           const char* where) {
  if (!a.ring().same_universe(b.ring()))
    throw std::invalid_argument(std::string(where) + ": ring mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_universe(*this, o, "add");
  if (ring_.flavor != o.ring_.flavor)
    throw std::invalid_argument("add: flavor mismatch");
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_same_universe(*this, o, "sub");
  if (ring_.flavor != o.ring_.flavor)
    throw std::invalid_argument("sub: flavor mismatch");
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_universe(*this, o, "mul");
  if (ring_.flavor != o.ring_.flavor)
    throw std::invalid_argument("mul: flavor mismatch");
  Polynomial r(ring_);
  const bool divided = ring_.flavor == Flavor::divided_power;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma.times(mb);
      Rat c = ca * cb;
      if (divided) {
        // X^U * X^V = (U+V choose U) X^{U+V}, per-variable binomials.
        Int mult = 1;
        for (const auto& [v, e] : ma.factors())
          mult *= binomial(m.exponent_of(v), e);
        c *= Rat(mult);
      }
      r.add_term(m, c);
    }
  }
  return r;
}

Polynomial Polynomial::scaled(const Rat& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
  return r;
}

Polynomial Polynomial::monomial(RingSpec ring, const Monomial& m, Rat c) {
  Polynomial r(ring);
  r.add_term(m, c);
  return r;
}

Polynomial Polynomial::variable(RingSpec ring, int row, int col) {
  return monomial(ring, Monomial::var(var_rank(ring, make_var(ring, row, col))));
}

Polynomial Polynomial::constant(RingSpec ring, const Rat& c) {
  return monomial(ring, Monomial::one(), c);
}

Polynomial diff_apply(const Polynomial& h, const Polynomial& F) {
  require_same_universe(h, F, "diff_apply");
  if (h.ring().flavor != Flavor::usual || F.ring().flavor != Flavor::usual)
    throw std::invalid_argument(
        "diff_apply: differentiation acts on usual-flavor polynomials");
  Polynomial r(F.ring());
  for (const auto& [mF, cF] : F.terms()) {
    for (const auto& [mh, ch] : h.terms()) {
      if (!mh.divides(mF)) continue;
      Int coef = 1;
      for (const auto& [v, e] : mh.factors())
        coef *= falling(mF.exponent_of(v), e);
      r.add_term(mh.divide_into(mF), cF * ch * Rat(coef));
    }
  }
  return r;
}

Polynomial contract_apply(const Polynomial& h, const Polynomial& F) {
  require_same_universe(h, F, "contract_apply");
  Polynomial r(F.ring());
  for (const auto& [mF, cF] : F.terms()) {
    for (const auto& [mh, ch] : h.terms()) {
      if (!mh.divides(mF)) continue;
      r.add_term(mh.divide_into(mF), cF * ch);
    }
  }
  return r;
}

Polynomial to_divided(const Polynomial& F) {
  if (F.ring().flavor != Flavor::usual)
    throw std::invalid_argument("to_divided expects a usual-flavor polynomial");
  RingSpec dring = F.ring();
  dring.flavor = Flavor::divided_power;
  Polynomial r(dring);
  for (const auto& [m, c] : F.terms()) {
    Int f = 1;
    for (const auto& [v, e] : m.factors()) f *= factorial(e);
    r.add_term(m, c * Rat(f));
  }
  return r;
}

Polynomial from_divided(const Polynomial& F) {
  if (F.ring().flavor != Flavor::divided_power)
    throw std::invalid_argument("from_divided expects a divided-power polynomial");
  RingSpec uring = F.ring();
  uring.flavor = Flavor::usual;
  Polynomial r(uring);
  for (const auto& [m, c] : F.terms()) {
    Int f = 1;
    for (const auto& [v, e] : m.factors()) f *= factorial(e);
    r.add_term(m, c / Rat(f));
  }
  return r;
}

Polynomial divided_power_linear(const Polynomial& L, int j) {
  if (L.is_zero() || L.degree() != 1 || !L.is_homogeneous())
    throw std::invalid_argument("divided_power_linear expects a linear form");
  if (j < 0) throw std::invalid_argument("negative divided power");
  RingSpec dring = L.ring();
  dring.flavor = Flavor::divided_power;
  std::vector<std::pair<int, Rat>> coeffs;  // (var rank, coefficient)
  for (const auto& [m, c] : L.terms())
    coeffs.emplace_back(m.factors()[0].first, c);

  Polynomial r(dring);
  std::vector<Monomial::Factor> current;
  std::function<void(size_t, int, Rat)> rec = [&](size_t idx, int remaining,
                                                  Rat acc) {
    if (idx == coeffs.size()) {
      if (remaining == 0) r.add_term(Monomial(current), acc);
      return;
    }
    if (idx + 1 == coeffs.size()) {
      Rat term = acc;
      for (int i = 0; i < remaining; ++i) term *= coeffs[idx].second;
      if (remaining > 0)
        current.push_back({static_cast<uint16_t>(coeffs[idx].first),
                           static_cast<uint16_t>(remaining)});
      r.add_term(Monomial(current), term);
      if (remaining > 0) current.pop_back();
      return;
    }
    Rat pow = acc;
    for (int e = 0; e <= remaining; ++e) {
      if (e > 0) {
        pow *= coeffs[idx].second;
        current.push_back({static_cast<uint16_t>(coeffs[idx].first),
                           static_cast<uint16_t>(e)});
      }
      rec(idx + 1, remaining - e, pow);
      if (e > 0) current.pop_back();
    }
  };
  rec(0, j, Rat(1));
  return r;
}

}  // namespace apolar
