#include "apolar/poly_io.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "apolar/order.hpp"

namespace apolar {

namespace {

struct Cursor {
  const std::string& s;
  size_t at = 0;

  void skip_ws() {
    while (at < s.size() && std::isspace(static_cast<unsigned char>(s[at])))
      ++at;
  }
  bool done() {
    skip_ws();
    return at >= s.size();
  }
  char peek() {
    skip_ws();
    return at < s.size() ? s[at] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++at;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      throw ParseError(std::string("expected '") + c + "'", at);
  }
  unsigned long parse_uint() {
    skip_ws();
    size_t start = at;
    while (at < s.size() && std::isdigit(static_cast<unsigned char>(s[at])))
      ++at;
    if (at == start) throw ParseError("expected an integer", at);
    return std::stoul(s.substr(start, at - start));
  }
};

bool starts_var(char c) {
  return c == 'x' || c == 'y' || c == 'X' || c == 'Y';
}

Monomial parse_factor(Cursor& cur, const RingSpec& ring, Monomial acc) {
  ++cur.at;  // the letter
  cur.expect('[');
  unsigned long r = cur.parse_uint();
  cur.expect(',');
  unsigned long c = cur.parse_uint();
  cur.expect(']');
  if (r < 1 || r > static_cast<unsigned long>(ring.n) || c < 1 ||
      c > static_cast<unsigned long>(ring.n))
    throw ParseError("variable index outside 1..n", cur.at);
  int exp = 1;
  if (cur.accept('^')) exp = static_cast<int>(cur.parse_uint());
  int rank = var_rank(ring, make_var(ring, static_cast<int>(r),
                                     static_cast<int>(c)));
  return acc.times(Monomial::var(rank, exp));
}

}  // namespace

Polynomial parse_poly(const RingSpec& ring, const std::string& text) {
  Cursor cur{text};
  Polynomial out(ring);
  bool first = true;
  while (!cur.done()) {
    int sign = 1;
    if (cur.accept('+')) {
      sign = 1;
    } else if (cur.accept('-')) {
      sign = -1;
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", cur.at);
    }
    first = false;

    Rat coef = sign;
    bool have_coef = false;
    char c = cur.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      unsigned long num = cur.parse_uint();
      Rat r(static_cast<long>(num));
      if (cur.accept('/')) {
        unsigned long den = cur.parse_uint();
        if (den == 0) throw ParseError("zero denominator", cur.at);
        r /= Rat(static_cast<long>(den));
      }
      coef *= r;
      have_coef = true;
    }

    Monomial m = Monomial::one();
    bool have_factor = false;
    if (have_coef) {
      if (cur.accept('*')) {
        if (!starts_var(cur.peek()))
          throw ParseError("expected a variable after '*'", cur.at);
        m = parse_factor(cur, ring, m);
        have_factor = true;
      }
    } else {
      if (!starts_var(cur.peek()))
        throw ParseError("expected a term", cur.at);
      m = parse_factor(cur, ring, m);
      have_factor = true;
    }
    while (have_factor && cur.accept('*')) {
      if (!starts_var(cur.peek()))
        throw ParseError("expected a variable after '*'", cur.at);
      m = parse_factor(cur, ring, m);
    }
    out.add_term(m, coef);
  }
  return out;
}

std::string print_poly(const Polynomial& p, char letter) {
  if (letter == 0)
    letter = p.ring().flavor == Flavor::divided_power ? 'X' : 'x';
  if (p.is_zero()) return "0";

  std::vector<std::pair<Monomial, Rat>> terms(p.terms().begin(),
                                              p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return order_less(Order::conca_lex, b.first, a.first);
  });

  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rat mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string coef = rat_exact(mag);
    if (m.is_one()) {
      out += coef;
      continue;
    }
    bool need_star = false;
    if (coef != "1") {
      out += coef;
      need_star = true;
    }
    for (const auto& [rank, exp] : m.factors()) {
      if (need_star) out += "*";
      VarId v = var_of_rank(p.ring(), rank);
      out += letter;
      out += "[" + std::to_string(v.row) + "," + std::to_string(v.col) + "]";
      if (exp > 1) out += "^" + std::to_string(exp);
      need_star = true;
    }
  }
  return out;
}

}  // namespace apolar
