#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "apolar/numbers.hpp"

namespace apolar {

enum class Layout { symmetric, generic };
enum class Flavor { usual, divided_power };

// Fixes the variable universe: matrix entries x[i,j] of an n x n matrix,
// upper triangle only for the symmetric layout. The flavor changes the
// multiplication and contraction rules, never the variables.
struct RingSpec {
  int n = 0;
  Layout layout = Layout::symmetric;
  Flavor flavor = Flavor::usual;

  int var_count() const {
    return layout == Layout::symmetric ? n * (n + 1) / 2 : n * n;
  }
  bool same_universe(const RingSpec& o) const {
    return n == o.n && layout == o.layout;
  }
  bool operator==(const RingSpec&) const = default;
};

RingSpec sym_ring(int n, Flavor flavor = Flavor::usual);
RingSpec gen_ring(int n, Flavor flavor = Flavor::usual);

// Matrix-entry variable, canonicalized so that row <= col in the symmetric
// layout (x[2,1] and x[1,2] are the same variable there).
struct VarId {
  int row = 1;
  int col = 1;
};

VarId make_var(const RingSpec& ring, int row, int col);

// Position of a variable in the row-major ranking
//   x[1,1] > x[1,2] > ... > x[1,n] > x[2,2] > ... > x[n,n]
// (upper triangle, symmetric) or the full row-major ranking (generic).
// Rank 0 is the greatest variable.
int var_rank(const RingSpec& ring, VarId v);
VarId var_of_rank(const RingSpec& ring, int rank);

// Sparse exponent vector, stored as (variable rank, exponent) pairs sorted by
// rank. Equality and hashing are structural; no zero exponents are kept.
class Monomial {
 public:
  using Factor = std::pair<uint16_t, uint16_t>;  // (var rank, exponent)

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);

  static Monomial one() { return Monomial(); }
  static Monomial var(int rank, int exp = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  int degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }
  int exponent_of(int rank) const;

  bool divides(const Monomial& m) const;
  Monomial times(const Monomial& m) const;
  // Pre: this->divides(m) was checked by the caller.
  Monomial divide_into(const Monomial& m) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial&) const = default;
  std::strong_ordering operator<=>(const Monomial& o) const {
    return factors_ <=> o.factors_;
  }

 private:
  std::vector<Factor> factors_;
  int degree_ = 0;
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const;
};

// Sparse exact-rational polynomial over the matrix-entry variables of one
// RingSpec. Immutable value semantics; all operations are pure.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingSpec ring) : ring_(ring) {}
  Polynomial(RingSpec ring, std::map<Monomial, Rat> terms);

  const RingSpec& ring() const { return ring_; }
  const std::map<Monomial, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  Rat coefficient(const Monomial& m) const;

  // Total degree of the largest term; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rat& c) const;
  bool operator==(const Polynomial&) const = default;

  void add_term(const Monomial& m, const Rat& c);

  static Polynomial monomial(RingSpec ring, const Monomial& m, Rat c = 1);
  static Polynomial variable(RingSpec ring, int row, int col);
  static Polynomial constant(RingSpec ring, const Rat& c);

 private:
  RingSpec ring_;
  std::map<Monomial, Rat> terms_;
};

// h acts on F by partial differentiation; both arguments must be usual
// flavor over the same variable universe.
Polynomial diff_apply(const Polynomial& h, const Polynomial& F);

// h acts on F by contraction: exponent subtraction with no combinatorial
// factor. When F carries the divided-power flavor this is the (dual-basis)
// pairing of the divided power ring; on usual polynomials it is the
// "unusual" contraction.
Polynomial contract_apply(const Polynomial& h, const Polynomial& F);

// Rewrites a usual polynomial on the divided-power monomial basis:
// c * x^U  ->  c * (prod u_i!) * X^U. Invertible in characteristic zero.
Polynomial to_divided(const Polynomial& F);
Polynomial from_divided(const Polynomial& F);

// Divided power L^[j] of a linear form: sum over |J| = j of a^J X^J.
Polynomial divided_power_linear(const Polynomial& L, int j);

void require_same_universe(const Polynomial& a, const Polynomial& b,
                           const char* where);

}  // namespace apolar
