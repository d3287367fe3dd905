#include "apolar/echelon.hpp"

#include <algorithm>

namespace apolar {

SparseVec sparse_axpy(const SparseVec& v, const Rat& c, const SparseVec& w) {
  SparseVec out;
  out.reserve(v.size() + w.size());
  size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
      out.push_back(v[i++]);
    } else if (i == v.size() || w[j].first < v[i].first) {
      out.emplace_back(w[j].first, c * w[j].second);
      ++j;
    } else {
      Rat s = v[i].second + c * w[j].second;
      if (s != 0) out.emplace_back(v[i].first, std::move(s));
      ++i, ++j;
    }
  }
  return out;
}

SparseVec Echelon::reduce(SparseVec v) const {
  // Pivot rows lead at their pivot position and their tails sit strictly
  // later, so eliminating positions left to right terminates in one sweep.
  size_t at = 0;
  while (at < v.size()) {
    if (v[at].second == 0) {
      v.erase(v.begin() + at);
      continue;
    }
    auto it = rows_.find(v[at].first);
    if (it == rows_.end()) {
      ++at;
      continue;
    }
    Rat c = -v[at].second;
    SparseVec merged = sparse_axpy(v, c, it->second);
    // Everything before `at` was pivot-free and is unchanged by the merge.
    v = std::move(merged);
  }
  return v;
}

bool Echelon::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  Rat lead = v.front().second;
  if (lead != 1)
    for (auto& [p, c] : v) c /= lead;
  uint32_t pos = v.front().first;
  rows_.emplace(pos, std::move(v));
  return true;
}

void Echelon::finalize() {
  // Back-substitute in descending pivot order; rows referenced during a pass
  // are already fully reduced.
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    SparseVec& row = it->second;
    size_t at = 1;  // keep the leading entry
    while (at < row.size()) {
      auto pit = rows_.find(row[at].first);
      if (pit == rows_.end() || pit->first == it->first) {
        ++at;
        continue;
      }
      Rat c = -row[at].second;
      row = sparse_axpy(row, c, pit->second);
    }
  }
}

size_t sparse_rank(std::vector<SparseVec> rows) {
  // Inserting short rows first keeps reduction work low.
  std::sort(rows.begin(), rows.end(), [](const SparseVec& a, const SparseVec& b) {
    if (a.empty() || b.empty()) return b.empty() && !a.empty();
    if (a.front().first != b.front().first)
      return a.front().first < b.front().first;
    return a.size() < b.size();
  });
  Echelon ech;
  for (auto& r : rows) ech.insert(std::move(r));
  return ech.rank();
}

}  // namespace apolar
