#include "apolar/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace apolar {

GradedSubspace::GradedSubspace(RingSpec ring, int degree, Order ord)
    : ring_(ring), degree_(degree), ord_(ord),
      ambient_(std::make_shared<BasisIndex>(ring, degree, ord)) {}

GradedSubspace GradedSubspace::span(RingSpec ring, int degree, Order ord,
                                    const std::vector<Polynomial>& gens) {
  GradedSubspace s(ring, degree, ord);
  s.insert_all(gens);
  s.finalize();
  return s;
}

SparseVec GradedSubspace::to_vec(const Polynomial& p) const {
  SparseVec v;
  v.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) v.emplace_back(ambient_->position(m), c);
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

Polynomial GradedSubspace::to_poly(const SparseVec& v) const {
  Polynomial p(ring_);
  for (const auto& [pos, c] : v) p.add_term(ambient_->monomial(pos), c);
  return p;
}

bool GradedSubspace::insert(const Polynomial& p) {
  if (p.is_zero()) return false;
  if (!p.is_homogeneous() || p.degree() != degree_)
    throw std::invalid_argument("subspace insert: wrong degree");
  return ech_.insert(to_vec(p));
}

void GradedSubspace::insert_all(const std::vector<Polynomial>& ps) {
  std::vector<SparseVec> vecs;
  vecs.reserve(ps.size());
  for (const auto& p : ps) {
    if (p.is_zero()) continue;
    if (!p.is_homogeneous() || p.degree() != degree_)
      throw std::invalid_argument("subspace insert: wrong degree");
    vecs.push_back(to_vec(p));
  }
  std::sort(vecs.begin(), vecs.end(),
            [](const SparseVec& a, const SparseVec& b) {
              if (a.front().first != b.front().first)
                return a.front().first < b.front().first;
              return a.size() < b.size();
            });
  for (auto& v : vecs) ech_.insert(std::move(v));
}

bool GradedSubspace::contains(const Polynomial& p) const {
  if (p.is_zero()) return true;
  return ech_.contains(to_vec(p));
}

Polynomial GradedSubspace::reduce(const Polynomial& p) const {
  return to_poly(ech_.reduce(to_vec(p)));
}

std::vector<Polynomial> GradedSubspace::basis() const {
  std::vector<Polynomial> out;
  out.reserve(ech_.rank());
  for (const auto& [pos, row] : ech_.rows()) out.push_back(to_poly(row));
  return out;
}

std::vector<Monomial> GradedSubspace::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(ech_.rank());
  for (const auto& [pos, row] : ech_.rows())
    out.push_back(ambient_->monomial(pos));
  return out;
}

bool GradedSubspace::same_subspace(const GradedSubspace& o) const {
  if (!(ring_.same_universe(o.ring_)) || degree_ != o.degree_) return false;
  if (dim() != o.dim()) return false;
  for (const auto& p : basis())
    if (!o.contains(p)) return false;
  return true;
}

}  // namespace apolar
