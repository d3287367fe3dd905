#include <doctest.h>

#include "apolar/engine.hpp"
#include "apolar/poly_io.hpp"
#include "fixtures.hpp"

using namespace apolar;
using fixtures::letter_poly;
using fixtures::sym_letters;
using fixtures::generic_letters_colmajor;

TEST_SUITE_BEGIN("invariants");

TEST_CASE("determinant expansions") {
  CHECK(det_poly(sym_ring(2)) ==
        parse_poly(sym_ring(2), "x[1,1]*x[2,2] - x[1,2]^2"));

  RingSpec r4 = sym_ring(4);
  Polynomial det4 = det_poly(r4);
  CHECK(det4.term_count() == 17);
  Polynomial quoted = letter_poly(
      r4, sym_letters(4),
      "d2f2 - 2cdfg + c2g2 - d2eh + 2bdgh - ag2h + 2cdei - 2bdfi - 2bcgi "
      "+ 2afgi + b2i2 - aei2 - c2ej + 2bcfj - af2j - b2hj + aehj");
  CHECK(det4 == quoted);

  // Generic layout keeps all n^2 variables distinct.
  CHECK(det_poly(gen_ring(2)) ==
        parse_poly(gen_ring(2), "x[1,1]*x[2,2] - x[1,2]*x[2,1]"));
  CHECK(det_poly(gen_ring(3)).term_count() == 6);
}

TEST_CASE("permanent and hafnian") {
  RingSpec r2 = sym_ring(2);
  CHECK(perm_poly(r2) == letter_poly(r2, sym_letters(2), "b2 + ac"));

  RingSpec r4 = sym_ring(4);
  Polynomial hf4 = hafnian_poly(r4);
  CHECK(hf4 == letter_poly(r4, sym_letters(4), "BI + CG + DF"));
  CHECK(to_ll(monhaf_dim(4)) == 3);

  CHECK(monhaf_monomials(6).size() == 15);
  CHECK(to_ll(monhaf_dim(6)) == 15);
  Polynomial hf6 = hafnian_poly(sym_ring(6));
  CHECK(hf6.term_count() == 15);
  for (const auto& [m, c] : hf6.terms()) CHECK(c == 1);

  CHECK_THROWS(hafnian_poly(sym_ring(3)));
  CHECK_THROWS(hafnian_poly(gen_ring(4)));
}

TEST_CASE("minors and sub-permanents") {
  RingSpec r4 = sym_ring(4);
  SubmatrixSelector sel{{1, 2}, {3, 4}};
  CHECK(minor_poly(r4, sel) == letter_poly(r4, sym_letters(4), "cg - df"));
  CHECK(subperm_poly(r4, sel) == letter_poly(r4, sym_letters(4), "cg + df"));
  CHECK_THROWS(minor_poly(r4, SubmatrixSelector{{1, 2}, {1}}));
  CHECK_THROWS(minor_poly(r4, SubmatrixSelector{{2, 1}, {1, 2}}));
}

TEST_CASE("immanants of the standard representation") {
  // Generic 3x3 with the column-major letter layout.
  RingSpec g3 = gen_ring(3);
  Polynomial immV = immanant_poly(g3, {2, 1});
  CHECK(immV == letter_poly(g3, generic_letters_colmajor(3), "2aei - dhc - bfg"));

  RingSpec s3 = sym_ring(3);
  CHECK(immanant_poly(s3, {2, 1}) ==
        letter_poly(s3, sym_letters(3), "2adf - 2bce"));

  // Sign and trivial characters reproduce det and perm.
  for (int n = 2; n <= 4; ++n) {
    RingSpec r = sym_ring(n);
    Partition sign(n, 1), triv{n};
    CHECK(immanant_poly(r, sign) == det_poly(r));
    CHECK(immanant_poly(r, triv) == perm_poly(r));
  }
  CHECK_THROWS(immanant_poly(s3, {2, 2}));
}

TEST_CASE("4x4 immanants quoted for the symmetric matrix") {
  RingSpec r4 = sym_ring(4);
  auto L = sym_letters(4);
  Polynomial immV = immanant_poly(r4, {3, 1});
  Polynomial quotedV = letter_poly(
      r4, L,
      "3aehj + b2hj + c2ej + d2eh + af2j + ag2h + aei2 "
      "- 2bfid - 2cgfd - 2bgci - b2i2 - c2g2 - d2f2");
  CHECK(immV == quotedV);

  Polynomial immW = immanant_poly(r4, {2, 2});
  Polynomial quotedW = letter_poly(
      r4, L,
      "2aehj - 2bfcj - 2bghd - 2ceid - 2afgi "
      "+ 2b2i2 + 2c2g2 + 2d2f2");
  CHECK(immW == quotedW);

  Polynomial immVp = immanant_poly(r4, {2, 1, 1});
  Polynomial quotedVp = letter_poly(
      r4, L,
      "3aehj - b2hj - c2ej - d2eh - af2j - ag2h - aei2 "
      "+ 2bfid + 2cgfd + 2bgci - b2i2 - c2g2 - d2f2");
  CHECK(immVp == quotedVp);
}

TEST_CASE("generator set sizes and annihilation") {
  CHECK(generator_set_expected_size(GeneratorKind::V, 4) == 35);
  CHECK(generator_set_expected_size(GeneratorKind::W, 4) == 34);
  CHECK(generator_set_expected_size(GeneratorKind::Hdeg3, 6) == 5);
  CHECK(generator_set_expected_size(GeneratorKind::AnnCo2, 4) == 22);

  for (int n = 2; n <= 6; ++n) {
    Polynomial det = det_poly(sym_ring(n));
    Polynomial perm = perm_poly(sym_ring(n));
    for (const auto& g : build_generator_set(GeneratorKind::V, n).members)
      CHECK(diff_apply(g, det).is_zero());
    for (const auto& g : build_generator_set(GeneratorKind::W, n).members)
      CHECK(diff_apply(g, perm).is_zero());
    for (const auto& g : build_generator_set(GeneratorKind::AnnCo2, n).members)
      CHECK(contract_apply(g, det).is_zero());
  }

  GeneratorSet h3 = build_generator_set(GeneratorKind::Hdeg3, 6);
  REQUIRE(h3.members.size() == 5);
  std::multiset<size_t> term_counts;
  for (const auto& f : h3.members) term_counts.insert(f.term_count());
  CHECK(term_counts == std::multiset<size_t>{6, 6, 6, 8, 8});
  Polynomial perm6 = perm_poly(sym_ring(6));
  for (const auto& f : h3.members) CHECK(diff_apply(f, perm6).is_zero());

  CHECK_THROWS(build_generator_set(GeneratorKind::Hdeg3, 5));
  CHECK_THROWS(build_generator_set(GeneratorKind::V, 1));
}

TEST_CASE("quoted degree-3 generator matches the 6x6 fixture") {
  RingSpec r6 = sym_ring(6);
  Polynomial f3 = letter_poly(
      r6, sym_letters(6), "FIN - DJO - FHQ + BOQ + CJR - BNR + DHT - CIT");
  auto gens = build_generator_set(GeneratorKind::Hdeg3, 6).members;
  CHECK(std::count(gens.begin(), gens.end(), f3) == 1);
}

TEST_CASE("monomial spaces and their dimensions") {
  RingSpec r4 = sym_ring(4);
  CHECK(monomial_space(MonomialSpaceKind::minors, r4, 2).dim() == 20);
  CHECK(monomial_space(MonomialSpaceKind::subpermanents, r4, 2).dim() == 21);
  CHECK(monomial_space(MonomialSpaceKind::monhaf, r4, 2).dim() == 3);
  CHECK(to_ll(minor_space_dim(4, 2)) == 20);
  CHECK(to_ll(subperm_space_dim(4, 2)) == 21);

  for (int n = 2; n <= 4; ++n)
    for (int k = 0; k <= n; ++k) {
      RingSpec r = sym_ring(n);
      CHECK(monomial_space(MonomialSpaceKind::minors, r, k).dim() ==
            static_cast<size_t>(to_ll(minor_space_dim(n, k))));
      CHECK(monomial_space(MonomialSpaceKind::subpermanents, r, k).dim() ==
            static_cast<size_t>(to_ll(subperm_space_dim(n, k))));
    }
  CHECK_THROWS(monomial_space(MonomialSpaceKind::minors, r4, 5));
  CHECK_THROWS(monomial_space(MonomialSpaceKind::monhaf, r4, 1));
}

TEST_CASE("det and perm share monomial support") {
  for (int n = 2; n <= 6; ++n) {
    Polynomial det = det_poly(sym_ring(n));
    Polynomial perm = perm_poly(sym_ring(n));
    REQUIRE(det.term_count() == perm.term_count());
    for (const auto& [m, c] : det.terms()) CHECK(perm.coefficient(m) != 0);
  }
}

TEST_CASE("acceptability oracle") {
  RingSpec r4 = sym_ring(4);
  auto L = sym_letters(4);
  CHECK(!is_acceptable(fixtures::letter_monomial(r4, L, "ab"), 4));
  CHECK(is_acceptable(fixtures::letter_monomial(r4, L, "bi"), 4));
  CHECK(is_acceptable(fixtures::letter_monomial(r4, L, "cdei"), 4));

  // Counting identity: acceptable + unacceptable = all monomials.
  for (int k = 1; k <= 3; ++k) {
    auto acc = acceptable_monomials(4, k);
    size_t unacc = 0;
    for (const auto& m : monomial_basis(r4, k))
      if (!is_acceptable(m, 4)) ++unacc;
    CHECK(acc.size() + unacc == monomial_basis(r4, k).size());
  }
}

TEST_SUITE_END();
