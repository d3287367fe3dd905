#include <doctest.h>

#include <random>

#include "apolar/engine.hpp"
#include "apolar/groebner.hpp"
#include "fixtures.hpp"

using namespace apolar;
using fixtures::letter_poly;
using fixtures::sym_letters;

TEST_SUITE_BEGIN("groebner");

TEST_CASE("leading terms under both orders") {
  RingSpec r6 = sym_ring(6);
  auto L6 = sym_letters(6);

  // Doset minor [1,2,3 | 4,5,6]: the flag monomial leads in Conca order.
  Polynomial minor = minor_poly(r6, {{1, 2, 3}, {4, 5, 6}});
  CHECK(leading_monomial(minor, Order::conca_lex) ==
        fixtures::letter_monomial(r6, L6, "DJO"));  // y14 y25 y36

  // Hafnian on rows 1,2,4,6: FI leads in the reverse order.
  Polynomial haf = letter_poly(r6, L6, "BR + DK + FI");
  CHECK(leading_monomial(haf, Order::reverse_conca_lex) ==
        fixtures::letter_monomial(r6, L6, "FI"));
  CHECK(leading_monomial(haf, Order::conca_lex) ==
        fixtures::letter_monomial(r6, L6, "BR"));

  Polynomial single = letter_poly(r6, L6, "3BR");
  auto [m, c] = leading_term(single, Order::conca_lex);
  CHECK(m == fixtures::letter_monomial(r6, L6, "BR"));
  CHECK(c == 3);

  CHECK_THROWS(leading_term(Polynomial(r6), Order::conca_lex));
}

TEST_CASE("example 3.9 order chain") {
  RingSpec r3 = sym_ring(3);
  auto L3 = sym_letters(3);
  const char* chain[] = {"ADF", "AE2", "B2F", "BEC", "C2D"};
  for (int i = 0; i + 1 < 5; ++i)
    CHECK(order_less(Order::conca_lex,
                     fixtures::letter_monomial(r3, L3, chain[i + 1]),
                     fixtures::letter_monomial(r3, L3, chain[i])));
}

TEST_CASE("s-polynomials quoted in the groebner proof") {
  RingSpec r5 = sym_ring(5);
  auto L = sym_letters(5);
  auto P = [&](const std::string& s) { return letter_poly(r5, L, s); };

  // (1) disjoint one-diagonal permanents
  Polynomial p1 = P("AG + BC"), p2 = P("FN + HI");
  CHECK(s_polynomial(p1, p2, Order::conca_lex) == P("BCFN - AGHI"));

  // (2) permanents sharing the diagonal factor
  Polynomial p3 = P("AN + DE");
  CHECK(s_polynomial(p1, p3, Order::conca_lex) == P("BCN - DEG"));

  // (3) hafnians with disjoint initials
  Polynomial h1 = P("HL + IK + GN"), h2 = P("DG + CH + BK");
  CHECK(s_polynomial(h1, h2, Order::conca_lex) ==
        P("BKHL + BIK2 - DG2N - CGHN"));

  // (4) hafnians sharing a factor
  Polynomial h3 = P("CH + DG + BK"), h4 = P("CI + EG + BL");
  CHECK(s_polynomial(h3, h4, Order::conca_lex) == P("CHL + DGL - CIK - EGK"));

  // (5) diagonal permanent against a hafnian; quoted up to the factor 2
  Polynomial d = P("2FJ + G2");
  CHECK(s_polynomial(d, h4, Order::conca_lex).scaled(2) ==
        P("BLG2 - 2FJCI - 2FJEG"));

  // (6) one-diagonal permanent against a hafnian with a common factor
  Polynomial p6 = P("BG + CF");
  CHECK(s_polynomial(p6, h4, Order::conca_lex) == P("CFL - CIG - EG2"));

  // S(f, f) = 0
  CHECK(s_polynomial(p1, p1, Order::conca_lex).is_zero());
}

TEST_CASE("quoted reductions land on zero") {
  // V is a Groebner basis under the reverse order (the triangularity order),
  // so every quoted S-polynomial reduces to zero there.
  RingSpec r5 = sym_ring(5);
  auto L = sym_letters(5);
  auto V5 = build_generator_set(GeneratorKind::V, 5).members;
  auto P = [&](const std::string& s) { return letter_poly(r5, L, s); };

  const Order rev = Order::reverse_conca_lex;
  CHECK(reduce(P("CHL + DGL - CIK - EGK"), V5, rev).is_zero());
  CHECK(reduce(P("BCN - DEG"), V5, rev).is_zero());
  CHECK(reduce(P("BKHL + BIK2 - DG2N - CGHN"), V5, rev).is_zero());
  CHECK(reduce(P("BLG2 - 2FJCI - 2FJEG"), V5, rev).is_zero());
  CHECK(reduce(P("CFL - CIG - EG2"), V5, rev).is_zero());
  CHECK(reduce(P("BCFN - AGHI"), V5, rev).is_zero());

  // Order-free cross-check: the quoted S-polynomials are degree-3/4 ideal
  // members.
  GradedSubspace slice3 = ideal_slice(V5, 3, r5);
  CHECK(slice3.contains(P("BCN - DEG")));
  CHECK(slice3.contains(P("CHL + DGL - CIK - EGK")));

  Polynomial p = P("ADF + C2D");
  CHECK(reduce(p, {}, Order::conca_lex) == p);
}

TEST_CASE("buchberger verification") {
  auto V4 = build_generator_set(GeneratorKind::V, 4).members;
  GroebnerReport rep = is_groebner(V4, Order::reverse_conca_lex);
  CHECK(rep.passed());
  CHECK(rep.pairs_checked == V4.size() * (V4.size() - 1) / 2);

  CHECK(is_groebner(build_generator_set(GeneratorKind::W, 4).members,
                    Order::reverse_conca_lex)
            .passed());

  // Monomial sets are always Groebner bases.
  RingSpec r3 = sym_ring(3);
  auto L3 = sym_letters(3);
  std::vector<Polynomial> monos = {letter_poly(r3, L3, "AB"),
                                   letter_poly(r3, L3, "C2")};
  CHECK(is_groebner(monos, Order::conca_lex).passed());

  // A pair with an unreducible S-polynomial fails.
  std::vector<Polynomial> broken = {letter_poly(r3, L3, "AD"),
                                    letter_poly(r3, L3, "AD + B2")};
  GroebnerReport bad = is_groebner(broken, Order::conca_lex);
  CHECK(!bad.passed());
  REQUIRE(bad.failures.size() == 1);
  CHECK(bad.failures[0].normal_form == letter_poly(r3, L3, "-B2"));
}

TEST_CASE("V is not a Groebner basis under plain Conca lex") {
  // Pinned counterexample: the S-pair of the unacceptable monomial y11*y12
  // with the diagonal binomial y12^2 + 2*y11*y22 leaves -1/2 y12^3, and no
  // Conca-lex leading monomial of V divides a power of y12. The Groebner
  // property holds in the reverse order instead.
  RingSpec r2 = sym_ring(2);
  auto L2 = sym_letters(2);
  Polynomial mono = letter_poly(r2, L2, "AB");
  Polynomial binom = letter_poly(r2, L2, "B2 + 2AC");
  Polynomial s = s_polynomial(mono, binom, Order::conca_lex);
  CHECK(s.scaled(-2) == letter_poly(r2, L2, "B3"));

  auto V2 = build_generator_set(GeneratorKind::V, 2).members;
  CHECK(!reduce(s, V2, Order::conca_lex).is_zero());
  CHECK(!is_groebner(V2, Order::conca_lex).passed());
  CHECK(is_groebner(V2, Order::reverse_conca_lex).passed());

  // The stuck monomial is nevertheless an ideal member.
  CHECK(ideal_slice(V2, 3, r2).contains(letter_poly(r2, L2, "B3")));
}

TEST_CASE("reduce is idempotent and drops ideal members") {
  std::mt19937_64 rng(99);
  RingSpec r4 = sym_ring(4);
  auto V4 = build_generator_set(GeneratorKind::V, 4).members;
  std::uniform_int_distribution<int> pick(0, static_cast<int>(V4.size()) - 1);
  std::uniform_int_distribution<int> var(0, r4.var_count() - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    // Random degree-3 polynomial built from V members and noise monomials.
    Polynomial p(r4);
    for (int i = 0; i < 2; ++i) {
      Polynomial noise =
          Polynomial::monomial(r4, Monomial::var(var(rng)), coef(rng));
      p = p + V4[pick(rng)] * noise;
    }
    Monomial m = Monomial::var(var(rng)).times(
        Monomial::var(var(rng)).times(Monomial::var(var(rng))));
    p.add_term(m, coef(rng));
    if (p.is_zero() || !p.is_homogeneous()) continue;

    Polynomial nf = reduce(p, V4, Order::conca_lex);
    CHECK(reduce(nf, V4, Order::conca_lex) == nf);

    // p - reduce(p) lies in the ideal slice.
    Polynomial diff = p - nf;
    if (!diff.is_zero()) {
      GradedSubspace slice = ideal_slice(V4, 3, r4);
      CHECK(slice.contains(diff));
    }
  }
}

TEST_CASE("leading monomials of the slice match the initial ideal") {
  // With V a Groebner basis under the reverse order, the degree-k leading
  // monomials of (V)_k are the degree-k multiples of the leading monomials
  // of V under that order.
  for (int n = 2; n <= 4; ++n) {
    RingSpec ring = sym_ring(n);
    auto V = build_generator_set(GeneratorKind::V, n).members;
    std::set<Monomial> lt;
    for (const auto& g : V)
      lt.insert(leading_monomial(g, Order::reverse_conca_lex));
    for (int k = 2; k <= 3; ++k) {
      std::set<Monomial> expected;
      for (const auto& g : lt)
        for (const auto& m : monomial_basis(ring, k - 2))
          expected.insert(m.times(g));
      GradedSubspace slice = ideal_slice(V, k, ring, Order::reverse_conca_lex);
      std::set<Monomial> got;
      for (const auto& m : slice.leading_monomials()) got.insert(m);
      CHECK(got == expected);
    }
  }
}

TEST_SUITE_END();
