#pragma once

// Letter-notation fixtures: the worked matrices label the upper triangle of
// the symmetric n x n matrix row-major as a, b, c, ... and the generic 3x3
// matrix column-major. "2bdgh - ag2h" reads as 2*b*d*g*h - a*g^2*h; letters
// are case-insensitive so Y-side quotes parse identically.

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>

#include "apolar/ring.hpp"

namespace apolar::fixtures {

inline std::map<char, VarId> sym_letters(int n) {
  std::map<char, VarId> out;
  char next = 'a';
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) out[next++] = VarId{i, j};
  return out;
}

inline std::map<char, VarId> generic_letters_colmajor(int n) {
  std::map<char, VarId> out;
  char next = 'a';
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i) out[next++] = VarId{i, j};
  return out;
}

inline Polynomial letter_poly(const RingSpec& ring,
                              const std::map<char, VarId>& letters,
                              const std::string& text) {
  Polynomial out(ring);
  size_t at = 0;
  auto skip = [&] {
    while (at < text.size() && std::isspace(static_cast<unsigned char>(text[at])))
      ++at;
  };
  bool first = true;
  while (skip(), at < text.size()) {
    long sign = 1;
    if (text[at] == '+') {
      ++at;
    } else if (text[at] == '-') {
      sign = -1;
      ++at;
    } else if (!first) {
      throw std::invalid_argument("letter_poly: expected sign at " + text.substr(at));
    }
    first = false;
    skip();
    long coef = 1;
    if (at < text.size() && std::isdigit(static_cast<unsigned char>(text[at]))) {
      coef = 0;
      while (at < text.size() && std::isdigit(static_cast<unsigned char>(text[at])))
        coef = coef * 10 + (text[at++] - '0');
    }
    Monomial m;
    bool any = false;
    while (at < text.size()) {
      char c = text[at];
      if (std::isspace(static_cast<unsigned char>(c))) break;
      if (c == '+' || c == '-') break;
      char letter = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      auto it = letters.find(letter);
      if (it == letters.end())
        throw std::invalid_argument(std::string("letter_poly: unknown letter ") + c);
      ++at;
      int exp = 1;
      if (at < text.size() && std::isdigit(static_cast<unsigned char>(text[at])))
        exp = text[at++] - '0';
      VarId v = make_var(ring, it->second.row, it->second.col);
      m = m.times(Monomial::var(var_rank(ring, v), exp));
      any = true;
    }
    if (!any && coef == 1)
      throw std::invalid_argument("letter_poly: empty term");
    out.add_term(m, Rat(sign * coef));
  }
  return out;
}

inline Monomial letter_monomial(const RingSpec& ring,
                                const std::map<char, VarId>& letters,
                                const std::string& text) {
  Polynomial p = letter_poly(ring, letters, text);
  if (p.term_count() != 1) throw std::invalid_argument("expected one monomial");
  return p.terms().begin()->first;
}

}  // namespace apolar::fixtures
