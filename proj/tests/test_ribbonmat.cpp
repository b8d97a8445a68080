#include "doctest.h"
#include "ribbonimm/corpus.hpp"
#include "ribbonimm/errors.hpp"
#include "ribbonimm/ribbonmat.hpp"
#include "support.hpp"

using namespace ril;

TEST_CASE("a single ribbon gives a 1x1 matrix") {
  InfiniteRibbon R = testing::example_ribbon();
  SkewShape s = ribbon_section_shape(R, -3, 4);
  RibbonMatrix rm = build(decompose(s, R), 7);
  REQUIRE(rm.matrix.n() == 1);
  CHECK(rm.matrix.at(0, 0) == skew_schur(s, 7));
  CHECK(check_determinant(rm));
}

TEST_CASE("row ribbon gives the Jacobi-Trudi matrix") {
  SkewShape s({4, 3, 1}, {2});
  RibbonMatrix rm = build(decompose(s, InfiniteRibbon::row()), 5);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(rm.matrix.at(i, j) == complete_h(s.outer()[i] - s.inner()[j] - i + j, 5));
  CHECK(check_determinant(rm));
  CHECK(check_determinant(build(decompose(SkewShape({3, 2}), InfiniteRibbon::row()), 5)));
}

TEST_CASE("column and hook ribbons") {
  SkewShape s({3, 2, 1});
  RibbonMatrix col = build(decompose(s, InfiniteRibbon::column()), 6);
  CHECK(col.matrix.n() == 3);
  CHECK(check_determinant(col));
  RibbonMatrix hook = build(decompose(s, InfiniteRibbon::hook()), 6);
  CHECK(hook.matrix.n() == 2);  // Giambelli: one hook per diagonal cell
  CHECK(check_determinant(hook));
}

TEST_CASE("worked example matrix") {
  RibbonDecomposition dec = testing::example_decomposition();
  RibbonMatrix rm = build(dec, 3);
  CHECK(rm.matrix.at(0, 3) == SymPoly::one(3));  // a_4 = b_1
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      auto shape = entry_shape(dec, i, j);
      int a = dec.a_tuple()[static_cast<std::size_t>(j)], b = dec.b_tuple()[static_cast<std::size_t>(i)];
      if (a < b) {
        REQUIRE(shape.has_value());
        CHECK(shape->size() == b - a);
        CHECK(is_ribbon(*shape));
        CHECK(rm.matrix.at(i, j) == skew_schur(*shape, 3));
      } else {
        CHECK_FALSE(shape.has_value());
        CHECK(rm.matrix.at(i, j) == (a == b ? SymPoly::one(3) : SymPoly(3)));
      }
    }
  CHECK(check_determinant(rm));
}

TEST_CASE("principal minors match the contracted shapes") {
  RibbonDecomposition dec = testing::example_decomposition();
  RibbonMatrix rm = build(dec, 3);
  RibbonMatrix whole = principal_minor(rm, {1, 2, 3, 4});
  CHECK(whole.matrix == rm.matrix);
  RibbonMatrix m = principal_minor(rm, {1, 3, 4});
  CHECK(m.decomposition.a_tuple() == std::vector<int>{0, -3, 3});
  CHECK(m.decomposition.b_tuple() == std::vector<int>{3, 9, 6});
  CHECK(m.matrix == rm.matrix.submatrix({0, 2, 3}, {0, 2, 3}));
  RibbonMatrix one = principal_minor(rm, {2});
  CHECK(one.matrix.at(0, 0) == rm.matrix.at(1, 1));
  CHECK_THROWS_AS(principal_minor(rm, {}), InvalidInput);
  CHECK_THROWS_AS(principal_minor(rm, {5}), InvalidInput);
}

TEST_CASE("odd and even shapes") {
  RibbonDecomposition dec = testing::example_decomposition();
  auto [red, blue] = odd_even_split(dec);
  RibbonDecomposition r = decompose(red, dec.ribbon()), b = decompose(blue, dec.ribbon());
  CHECK(r.a_tuple() == std::vector<int>{0, -3});
  CHECK(r.b_tuple() == std::vector<int>{3, 9});
  CHECK(b.a_tuple() == std::vector<int>{-4, 3});
  CHECK(b.b_tuple() == std::vector<int>{5, 6});
  RibbonMatrix rm = build(dec, 3);
  CHECK(minor(rm.matrix, {0, 2}, {0, 2}) == skew_schur(red, 3));
  CHECK(minor(rm.matrix, {1, 3}, {1, 3}) == skew_schur(blue, 3));

  SkewShape single = ribbon_section_shape(dec.ribbon(), -2, 5);
  auto [red1, blue1] = odd_even_split(decompose(single, dec.ribbon()));
  CHECK(red1 == single);
  CHECK(blue1.empty());
  CHECK(odd_indices(5) == std::vector<int>{1, 3, 5});
  CHECK(even_indices(5) == std::vector<int>{2, 4});
}

TEST_CASE("determinant identity and minors on a small corpus") {
  for (const auto& dec : generate_corpus({5, 3})) {
    RibbonMatrix rm = build(dec, dec.shape().size());
    CHECK(check_determinant(rm));
    CHECK(determinant(rm.matrix).is_homogeneous());
    for (int i = 0; i < dec.length(); ++i)
      for (int j = 0; j < dec.length(); ++j)
        if (!rm.matrix.at(i, j).is_zero())
          CHECK(rm.matrix.at(i, j).degree() == dec.b_tuple()[static_cast<std::size_t>(i)] - dec.a_tuple()[static_cast<std::size_t>(j)]);
    std::vector<int> all(static_cast<std::size_t>(dec.length()));
    for (int k = 0; k < dec.length(); ++k) all[static_cast<std::size_t>(k)] = k + 1;
    for (unsigned mask = 1; mask < (1u << dec.length()); ++mask) {
      std::vector<int> I;
      for (int k = 0; k < dec.length(); ++k)
        if ((mask >> k) & 1u) I.push_back(k + 1);
      CHECK_NOTHROW(principal_minor(rm, I));
    }
  }
}

TEST_CASE("positivity harness") {
  RibbonDecomposition dec = testing::example_decomposition();
  PositivityReport r = theorem1_harness(dec, 3);
  CHECK(r.pass);
  CHECK(r.types.size() == 14);
  for (const auto& t : r.types) CHECK(t.positive);
  SkewShape single = ribbon_section_shape(dec.ribbon(), -2, 5);
  PositivityReport one = theorem1_harness(decompose(single, dec.ribbon()), 4);
  REQUIRE(one.types.size() == 1);
  CHECK(one.types[0].expansion == expand_schur(skew_schur(single, 4)));
  for (ImmRoute route : {ImmRoute::Definition, ImmRoute::Shuffle, ImmRoute::Covers, ImmRoute::Crystal})
    CHECK(parse_route(route_name(route)) == route);
  CHECK_THROWS_AS(parse_route("magic"), InvalidInput);
}

TEST_CASE("remark fixtures") {
  RemarkMatrices rm = remark_matrices(4);
  CHECK(rm.remark_1_3.n() == 4);
  CHECK(rm.remark_1_3.at(0, 0) == skew_schur(SkewShape({1, 1}), 4));
  CHECK(rm.remark_1_3.at(3, 0) == SymPoly::one(4));
  CHECK(rm.remark_1_3.at(3, 2).is_zero());
  CHECK(rm.remark_2_7.at(2, 3).is_zero());
  CHECK(fixture_matrix("example_2_3", 3) == build(testing::example_decomposition(), 3).matrix);
  CHECK_THROWS_AS(fixture_matrix("nope", 3), InvalidInput);
}
