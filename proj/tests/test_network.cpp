#include <set>

#include "doctest.h"
#include "ribbonimm/corpus.hpp"
#include "ribbonimm/errors.hpp"
#include "ribbonimm/network.hpp"
#include "support.hpp"

using namespace ril;

namespace {

SymPoly cover_sum(const RibbonNetwork& net) {
  MonomialAccumulator acc(net.nvars());
  for_each_cover(net, [&](const ColoredCover& x) { acc.add(cover_weight(net, x)); });
  return acc.to_sympoly();
}

}  // namespace

TEST_CASE("network shape and acyclicity") {
  RibbonDecomposition dec = testing::example_decomposition();
  RibbonNetwork net = build_network(dec, 3);
  CHECK(net.content_lo() == -5);
  CHECK(net.content_hi() == 10);
  for (int v = 0; v < net.num_vertices(); ++v) {
    NetVertex p = net.coords(v);
    for (const auto& e : net.out_edges(v)) {
      NetVertex q = net.coords(e.to);
      switch (e.kind) {
        case EdgeKind::Diagonal:
          CHECK(q.content == p.content - 1);
          CHECK(q.height == p.height + 1);
          CHECK(dec.ribbon().step(p.content - 1) == StepDir::Below);
          break;
        case EdgeKind::Horizontal:
          CHECK(q.content == p.content - 1);
          CHECK(q.height == p.height);
          CHECK(dec.ribbon().step(p.content - 1) == StepDir::Left);
          break;
        case EdgeKind::Up:
          CHECK(q.content == p.content);
          CHECK(q.height == p.height + 1);
          CHECK(dec.ribbon().step(p.content) == StepDir::Below);
          break;
        case EdgeKind::Down:
          CHECK(q.content == p.content);
          CHECK(q.height == p.height - 1);
          CHECK(dec.ribbon().step(p.content) == StepDir::Left);
          break;
      }
    }
  }
}

TEST_CASE("endpoints of the row ribbon") {
  RibbonDecomposition dec = decompose(SkewShape({3, 2}), InfiniteRibbon::row());
  RibbonNetwork net(dec, 3);
  for (int k = 1; k <= 2; ++k) {
    CHECK(net.coords(net.source(k)).height == net.top());
    CHECK(net.coords(net.sink(k)).height == 1);
  }
}

TEST_CASE("single path sums are the matrix entries") {
  for (const InfiniteRibbon& R : {InfiniteRibbon::row(), InfiniteRibbon::column(), testing::example_ribbon()}) {
    for (const auto& s : {SkewShape({3, 2, 2}, {1}), SkewShape({4, 4, 2}, {2, 1})}) {
      RibbonDecomposition dec = [&] {
        try {
          return decompose(s, R);
        } catch (const Error&) {
          return decompose(s, InfiniteRibbon::row());
        }
      }();
      RibbonNetwork net(dec, 3);
      RibbonMatrix rm = build(dec, 3);
      for (int i = 1; i <= dec.length(); ++i)
        for (int j = 1; j <= dec.length(); ++j) CHECK(path_weight_sum(net, i, j) == rm.matrix.at(i - 1, j - 1));
    }
  }
  RibbonDecomposition row = decompose(SkewShape({5, 1}), InfiniteRibbon::row());
  RibbonNetwork rn(row, 3);
  CHECK(path_weight_sum(rn, 1, 1) == complete_h(5, 3));
  RibbonDecomposition col = decompose(SkewShape({2, 2, 1, 1}), InfiniteRibbon::column());
  RibbonNetwork cn(col, 4);
  CHECK(path_weight_sum(cn, 1, 1) == elementary_e(4, 4));
}

TEST_CASE("worked example entry and the LGV sum") {
  RibbonDecomposition dec = testing::example_decomposition();
  RibbonNetwork net(dec, 3);
  auto shape = entry_shape(dec, 2, 0);
  REQUIRE(shape.has_value());
  CHECK(shape->size() == 9);
  CHECK(path_weight_sum(net, 3, 1) == skew_schur(*shape, 3));
  CHECK(path_weight_sum(net, 1, 4) == SymPoly::one(3));
  CHECK(lgv_sum(net) == skew_schur(dec.shape(), 3));
}

TEST_CASE("covers are counted by pairs of tableaux") {
  for (const auto& dec : generate_corpus({5, 3})) {
    if (dec.length() > 3) continue;
    auto [red, blue] = odd_even_split(dec);
    for (int N = 1; N <= 2; ++N) {
      RibbonNetwork net(dec, N);
      auto covers = enumerate_covers(net);
      CHECK(Integer(covers.size()) == count_ssyt(red, N) * count_ssyt(blue, N));
      CHECK(cover_sum(net) == skew_schur(red, N) * skew_schur(blue, N));
    }
  }
}

TEST_CASE("disjoint covers have the identity type") {
  for (const auto& dec : generate_corpus({5, 3})) {
    if (dec.length() > 3) continue;
    RibbonNetwork net(dec, 2);
    for_each_cover(net, [&](const ColoredCover& x) {
      std::set<int> used;
      bool disjoint = true;
      for (const auto* fam : {&x.red, &x.blue})
        for (const auto& p : *fam)
          for (int v : p) disjoint = used.insert(v).second && disjoint;
      if (disjoint) CHECK(uncross_type(net, x) == NoncrossingMatching::identity(dec.length()));
    });
  }
}

TEST_CASE("covers and shuffle tableaux correspond") {
  for (const auto& dec : generate_corpus({5, 3})) {
    if (dec.length() > 3) continue;
    DiagramPtr d = build_diagram(dec);
    RibbonNetwork net(dec, 3);
    for_each_cover(net, [&](const ColoredCover& x) {
      ShuffleTableau T = tableau_from_cover(net, d, x);
      CHECK(T.valid());
      CHECK(T.weight(3) == cover_weight(net, x));
      CHECK(tl_type(T) == uncross_type(net, x));
      ColoredCover back = cover_from_tableau(net, T);
      CHECK(back.red == x.red);
      CHECK(back.blue == x.blue);
    });
  }
}

TEST_CASE("immanants by covers") {
  RibbonDecomposition dec = testing::example_decomposition();
  auto by_cov = imm_by_covers_all(dec, 2);
  auto by_def = immanants(dec, 2, ImmRoute::Definition);
  for (const auto& tau : all_matchings(4)) {
    SymPoly a = by_cov.count(tau) ? by_cov.at(tau) : SymPoly(2);
    CHECK(a == by_def.at(tau));
    CHECK(imm_by_covers(dec, 2, tau) == a);
  }
  SkewShape single = ribbon_section_shape(dec.ribbon(), -2, 5);
  CHECK(imm_by_covers(decompose(single, dec.ribbon()), 3, NoncrossingMatching::identity(1)) == skew_schur(single, 3));
}
