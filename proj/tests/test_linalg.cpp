#include <doctest.h>

#include <algorithm>
#include <random>

#include "apolar/subspace.hpp"
#include "apolar/invariants.hpp"

using namespace apolar;

TEST_SUITE_BEGIN("linalg");

TEST_CASE("echelon rank on dense little matrices") {
  // rows of a rank-2 3x3 matrix
  std::vector<SparseVec> rows = {
      {{0, Rat(1)}, {1, Rat(2)}, {2, Rat(3)}},
      {{0, Rat(2)}, {1, Rat(4)}, {2, Rat(6)}},
      {{0, Rat(1)}, {1, Rat(1)}, {2, Rat(1)}},
  };
  CHECK(sparse_rank(rows) == 2);
  CHECK(sparse_rank({}) == 0);
  CHECK(sparse_rank({{}}) == 0);
}

TEST_CASE("echelon reduce and membership") {
  Echelon ech;
  ech.insert({{0, Rat(1)}, {2, Rat(1)}});
  ech.insert({{1, Rat(1)}, {2, Rat(-1)}});
  CHECK(ech.rank() == 2);
  // combination of the two rows
  CHECK(ech.contains({{0, Rat(2)}, {1, Rat(2)}, {2, Rat(0)}}));
  CHECK(ech.contains({{0, Rat(2)}, {1, Rat(2)}}));
  CHECK(!ech.contains({{2, Rat(1)}}));
  CHECK(!ech.insert({{0, Rat(1)}, {1, Rat(1)}}));
  CHECK(ech.insert({{2, Rat(5)}}));
  CHECK(ech.rank() == 3);
}

TEST_CASE("rref is canonical regardless of insertion order") {
  std::vector<SparseVec> vecs = {
      {{0, Rat(2)}, {1, Rat(2)}, {3, Rat(4)}},
      {{1, Rat(1)}, {2, Rat(1)}},
      {{0, Rat(1)}, {2, Rat(-1)}, {3, Rat(2)}},
      {{2, Rat(3)}, {3, Rat(3)}},
  };
  std::vector<std::map<uint32_t, SparseVec>> results;
  std::sort(vecs.begin(), vecs.end());
  do {
    Echelon ech;
    for (const auto& v : vecs) ech.insert(v);
    ech.finalize();
    results.push_back(ech.rows());
  } while (std::next_permutation(vecs.begin(), vecs.end()));
  for (const auto& r : results) CHECK(r == results.front());
}

TEST_CASE("graded subspace span and reduce") {
  RingSpec r = sym_ring(2);
  auto x = Polynomial::variable(r, 1, 1);
  auto y = Polynomial::variable(r, 1, 2);
  auto z = Polynomial::variable(r, 2, 2);

  GradedSubspace s = GradedSubspace::span(r, 2, Order::conca_lex,
                                          {x * x, x * y + y * y, y * y});
  CHECK(s.dim() == 3);
  CHECK(s.ambient_dim() == 6);
  CHECK(s.contains(x * y));
  CHECK(!s.contains(x * z));
  Polynomial residue = s.reduce(x * z + x * y);
  CHECK(residue == x * z);

  // RREF rows: unit leading coefficients, strictly decreasing leads.
  auto basis = s.basis();
  auto leads = s.leading_monomials();
  REQUIRE(basis.size() == 3);
  for (size_t i = 0; i < basis.size(); ++i)
    CHECK(basis[i].coefficient(leads[i]) == 1);
  for (size_t i = 1; i < leads.size(); ++i)
    CHECK(order_less(Order::conca_lex, leads[i], leads[i - 1]));
}

TEST_CASE("subspace equality via canonical form") {
  RingSpec r = sym_ring(2);
  auto x = Polynomial::variable(r, 1, 1);
  auto y = Polynomial::variable(r, 1, 2);
  GradedSubspace a = GradedSubspace::span(r, 2, Order::conca_lex,
                                          {x * x + y * y, x * x - y * y});
  GradedSubspace b = GradedSubspace::span(r, 2, Order::conca_lex,
                                          {x * x, y * y, x * x + y * y});
  CHECK(a.same_subspace(b));
  GradedSubspace c = GradedSubspace::span(r, 2, Order::conca_lex, {x * x});
  CHECK(!a.same_subspace(c));
}

TEST_SUITE_END();
