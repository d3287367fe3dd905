#include "apolar/groebner.hpp"

#include <stdexcept>

namespace apolar {

std::pair<Monomial, Rat> leading_term(const Polynomial& p, Order ord) {
  if (p.is_zero())
    throw std::invalid_argument("leading_term of the zero polynomial");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : p.terms())
    if (!best || order_less(ord, *best, m)) best = &m;
  return {*best, p.coefficient(*best)};
}

Monomial leading_monomial(const Polynomial& p, Order ord) {
  return leading_term(p, ord).first;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, Order ord) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("s_polynomial of a zero polynomial");
  require_same_universe(f, g, "s_polynomial");
  auto [lmf, lcf] = leading_term(f, ord);
  auto [lmg, lcg] = leading_term(g, ord);
  Monomial h = Monomial::lcm(lmf, lmg);
  Polynomial left =
      Polynomial::monomial(f.ring(), lmf.divide_into(h), Rat(1) / lcf) * f;
  Polynomial right =
      Polynomial::monomial(g.ring(), lmg.divide_into(h), Rat(1) / lcg) * g;
  return left - right;
}

Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& gens,
                  Order ord) {
  // Homogeneity bounds every monomial chain of one degree, so the division
  // terminates under the pure lex orders used here.
  if (!p.is_homogeneous())
    throw std::invalid_argument("reduce: input must be homogeneous");
  std::vector<std::pair<Monomial, Rat>> lts;
  lts.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.is_zero())
      throw std::invalid_argument("reduce: zero generator");
    if (!g.is_homogeneous())
      throw std::invalid_argument("reduce: generators must be homogeneous");
    lts.push_back(leading_term(g, ord));
  }

  Polynomial rest = p;
  Polynomial remainder(p.ring());
  while (!rest.is_zero()) {
    auto [lm, lc] = leading_term(rest, ord);
    bool divided = false;
    for (size_t i = 0; i < gens.size(); ++i) {
      if (!lts[i].first.divides(lm)) continue;
      Polynomial factor = Polynomial::monomial(
          p.ring(), lts[i].first.divide_into(lm), lc / lts[i].second);
      rest = rest - factor * gens[i];
      divided = true;
      break;
    }
    if (!divided) {
      remainder.add_term(lm, lc);
      Polynomial lead = Polynomial::monomial(p.ring(), lm, lc);
      rest = rest - lead;
    }
  }
  return remainder;
}

GroebnerReport is_groebner(const std::vector<Polynomial>& gens, Order ord) {
  GroebnerReport report;
  for (size_t i = 0; i < gens.size(); ++i) {
    for (size_t j = i + 1; j < gens.size(); ++j) {
      ++report.pairs_checked;
      Polynomial s = s_polynomial(gens[i], gens[j], ord);
      if (s.is_zero()) continue;
      Polynomial nf = reduce(s, gens, ord);
      if (!nf.is_zero()) report.failures.push_back({i, j, nf});
    }
  }
  return report;
}

}  // namespace apolar
