#include <random>

#include "doctest.h"
#include "ribbonimm/corpus.hpp"
#include "ribbonimm/errors.hpp"
#include "ribbonimm/symfunc.hpp"
#include "support.hpp"

using namespace ril;

namespace {

SchurExpansion schur(int N, std::initializer_list<std::pair<Partition, int>> terms) {
  SchurExpansion e(N);
  for (const auto& [lam, c] : terms) e.add_term(lam, c);
  return e;
}

// Sum of c_lambda * s_lambda.
SymPoly from_schur(int N, std::initializer_list<std::pair<Partition, int>> terms) {
  return schur(N, terms).to_sympoly();
}

}  // namespace

TEST_CASE("SSYT enumeration") {
  CHECK(enumerate_ssyt(SkewShape({1}), 3).size() == 3);
  auto t21 = enumerate_ssyt(SkewShape({2, 1}), 2);
  REQUIRE(t21.size() == 2);
  CHECK(t21[0].entries == std::vector<int>{1, 1, 2});
  CHECK(t21[1].entries == std::vector<int>{1, 2, 2});
  CHECK(enumerate_ssyt(SkewShape({1, 1, 1}), 2).empty());
  for (const auto& T : enumerate_ssyt(SkewShape({3, 2, 2}, {1, 1}), 3)) CHECK(T.valid());
  for (const auto& s : {SkewShape({3, 2, 2}, {1, 1}), SkewShape({4, 2}, {1}), SkewShape({2, 2, 2})})
    for (int N = 0; N <= 4; ++N) CHECK(count_ssyt(s, N) == Integer(enumerate_ssyt(s, N).size()));
}

TEST_CASE("skew Schur polynomials") {
  for (int k = 0; k <= 4; ++k) CHECK(skew_schur(SkewShape({k}), 3) == complete_h(k, 3));
  CHECK(skew_schur(SkewShape({1, 1}), 2) == SymPoly::monomial(2, {1, 1}));
  SymPoly s = skew_schur(SkewShape({2, 2}, {1}), 3);
  CHECK(s.is_homogeneous());
  CHECK(s.degree() == 3);
  SchurExpansion e = expand_schur(s);
  for (const auto& lam : partitions_of(3, 3)) CHECK(e.coeff(lam) == lr_coefficient({2, 2}, {1}, lam));
  CHECK(e == schur(3, {{{2, 1}, 1}}));
}

TEST_CASE("arithmetic") {
  const int N = 3;
  SymPoly h1 = complete_h(1, N);
  CHECK(h1 * SymPoly::one(N) == h1);
  CHECK(h1 * h1 == SymPoly::monomial(N, {2}) + SymPoly::monomial(N, {1, 1}, 2));
  CHECK(expand_schur(h1 * h1) == schur(N, {{{2}, 1}, {{1, 1}, 1}}));
  CHECK(expand_schur(complete_h(2, N) * complete_h(1, N)) == schur(N, {{{3}, 1}, {{2, 1}, 1}}));
  CHECK(sub(h1, h1).is_zero());
  CHECK(add(h1, h1) == scale(h1, 2));
  CHECK(mul(h1, h1) == h1 * h1);
  CHECK_THROWS_AS(h1 + complete_h(1, 2), InvalidInput);
  CHECK(elementary_e(4, 3).is_zero());
  CHECK(SymPoly::monomial(2, {1, 1, 1}).is_zero());
}

TEST_CASE("expand_schur round-trips") {
  CHECK(expand_schur(SymPoly(3)).is_zero());
  for (const auto& lam : partitions_of(4, 4)) CHECK(expand_schur(schur_poly(lam, 4)) == schur(4, {{lam, 1}}));
  std::mt19937 rng(3);
  for (int t = 0; t < 20; ++t) {
    SymPoly p = testing::random_entry(rng, 3) * testing::random_entry(rng, 3);
    SchurExpansion e = expand_schur(p);
    CHECK(e.to_sympoly() == p);
  }
}

TEST_CASE("Schur positivity verdicts") {
  CHECK(is_schur_positive(skew_schur(SkewShape({4, 3, 1}, {2}), 4)).first);
  auto [ok, cert] = is_schur_positive(from_schur(2, {{{2}, 1}, {{1, 1}, -1}}));
  CHECK_FALSE(ok);
  CHECK(cert.coeff({1, 1}) == -1);
  REQUIRE(cert.negative_terms().size() == 1);
  CHECK(cert.negative_terms()[0].first == Partition({1, 1}));
  CHECK(cert.str() == "s[2] - s[1,1]");
  CHECK(cert.faithful());
  CHECK_FALSE(expand_schur(complete_h(3, 2)).faithful());
}

TEST_CASE("Littlewood-Richardson oracle") {
  CHECK(lr_coefficient({3, 1}, {}, {3, 1}) == 1);
  CHECK(lr_coefficient({2, 1}, {1}, {1, 1}) == 1);
  CHECK(lr_coefficient({2, 2}, {1}, {2}) == 0);
  CHECK(lr_coefficient({3, 2, 1}, {2, 1}, {2, 1}) == 2);
  CHECK(lr_coefficient({2, 1}, {1}, {3}) == 0);
}

TEST_CASE("determinants") {
  SFMatrix one(1, 3);
  one.set(0, 0, complete_h(2, 3));
  CHECK(determinant(one) == complete_h(2, 3));
  CHECK(determinant(SFMatrix(0, 3)) == SymPoly::one(3));
  SFMatrix jt(2, 4);
  jt.set(0, 0, complete_h(2, 4));
  jt.set(0, 1, complete_h(3, 4));
  jt.set(1, 0, complete_h(1, 4));
  jt.set(1, 1, complete_h(2, 4));
  CHECK(determinant(jt) == schur_poly({2, 2}, 4));
  std::mt19937 rng(5);
  SFMatrix rep = testing::random_matrix(rng, 3, 2);
  for (int j = 0; j < 3; ++j) rep.set(2, j, rep.at(0, j));
  CHECK(determinant(rep).is_zero());
  CHECK(minor(jt, {}, {}) == SymPoly::one(4));
  CHECK(minor(jt, {1}, {0}) == complete_h(1, 4));
}

TEST_CASE("symmetry under swapping variables") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> val(-4, 4);
  for (const auto& s : connected_shapes(5)) {
    SymPoly p = skew_schur(s, 3);
    std::vector<Integer> x{val(rng), val(rng), val(rng)}, y{x[1], x[0], x[2]}, z{x[0], x[2], x[1]};
    CHECK(p.evaluate(x) == p.evaluate(y));
    CHECK(p.evaluate(x) == p.evaluate(z));
  }
}

TEST_CASE("expansions are stable in the number of variables") {
  for (const auto& s : connected_shapes(4)) {
    SchurExpansion e3 = expand_schur(skew_schur(s, 3)), e4 = expand_schur(skew_schur(s, 4));
    for (const auto& [lam, c] : e4.coeffs())
      if (lam.length() <= 3) CHECK(e3.coeff(lam) == c);
    for (const auto& [lam, c] : e4.coeffs()) CHECK(c > 0);
  }
}

TEST_CASE("monomial accumulator rejects asymmetric input") {
  MonomialAccumulator acc(2);
  acc.add({1, 0});
  CHECK_THROWS_AS(acc.to_sympoly(), InternalError);
  acc.add({0, 1});
  CHECK(acc.to_sympoly() == complete_h(1, 2));
}
