#include "apolar/order.hpp"

#include <stdexcept>

namespace apolar {

std::strong_ordering order_cmp(Order ord, const Monomial& a, const Monomial& b) {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  if (ord == Order::conca_lex) {
    // First exponent difference, reading the ranking from the greatest
    // variable; the larger exponent wins.
    size_t i = 0, j = 0;
    while (i < fa.size() && j < fb.size()) {
      if (fa[i].first < fb[j].first) return std::strong_ordering::greater;
      if (fb[j].first < fa[i].first) return std::strong_ordering::less;
      if (fa[i].second != fb[j].second)
        return fa[i].second <=> fb[j].second;
      ++i, ++j;
    }
    if (i < fa.size()) return std::strong_ordering::greater;
    if (j < fb.size()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
  }
  // Reverse lexicographic: last exponent difference, reading from the least
  // variable; the smaller exponent wins.
  size_t i = fa.size(), j = fb.size();
  while (i > 0 && j > 0) {
    if (fa[i - 1].first > fb[j - 1].first) return std::strong_ordering::less;
    if (fb[j - 1].first > fa[i - 1].first) return std::strong_ordering::greater;
    if (fa[i - 1].second != fb[j - 1].second)
      return fb[j - 1].second <=> fa[i - 1].second;
    --i, --j;
  }
  if (i > 0) return std::strong_ordering::less;
  if (j > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool order_less(Order ord, const Monomial& a, const Monomial& b) {
  return order_cmp(ord, a, b) == std::strong_ordering::less;
}

std::string order_name(Order ord) {
  return ord == Order::conca_lex ? "conca" : "reverse";
}

Order order_from_name(const std::string& s) {
  if (s == "conca" || s == "conca_lex" || s == "lex") return Order::conca_lex;
  if (s == "reverse" || s == "reverse_conca_lex" || s == "revlex")
    return Order::reverse_conca_lex;
  throw std::invalid_argument("unknown monomial order: " + s);
}

}  // namespace apolar
