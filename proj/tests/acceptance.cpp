// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance            run every criterion
//   acceptance 3 8        run only the listed ones

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ribbonimm/corpus.hpp"
#include "ribbonimm/errors.hpp"
#include "ribbonimm/klbase.hpp"
#include "ribbonimm/network.hpp"
#include "ribbonimm/shuffle.hpp"
#include "support.hpp"

using namespace ril;
using ril::testing::zero_based;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

const std::vector<RibbonDecomposition>& corpus() {
  static const std::vector<RibbonDecomposition> c = generate_corpus(CorpusOptions{});
  return c;
}

std::string vec_str(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string instance_str(const RibbonDecomposition& d) {
  return d.shape().str() + " a=" + vec_str(d.a_tuple()) + " b=" + vec_str(d.b_tuple());
}

// Records the first few failures and counts all of them.
struct Failures {
  int count = 0;
  std::string first;
  void add(const std::string& what) {
    if (count++ < 3) first += (first.empty() ? "" : "; ") + what;
  }
  Outcome outcome(const std::string& ok) const {
    if (count == 0) return {true, ok};
    return {false, std::to_string(count) + " violations: " + first};
  }
};

Outcome determinant_identity() {
  SweepOptions opts;
  opts.kind = SweepKind::Det;
  SweepReport r = run_sweep(opts);
  Failures f;
  for (const auto& it : r.items)
    if (!it.pass) f.add(it.shape + " " + it.ribbon);
  if (r.items.size() < 200) f.add("corpus has only " + std::to_string(r.items.size()) + " decompositions");
  return f.outcome(std::to_string(r.passed) + " decompositions, det equals the skew Schur function");
}

Outcome example_pin() {
  Failures f;
  RibbonDecomposition dec = testing::example_decomposition();
  if (dec.a_tuple() != std::vector<int>{0, -4, -3, 3}) f.add("a = " + vec_str(dec.a_tuple()));
  if (dec.b_tuple() != std::vector<int>{3, 5, 9, 6}) f.add("b = " + vec_str(dec.b_tuple()));
  RibbonMatrix rm = build(dec, 4);
  RibbonMatrix m = principal_minor(rm, {1, 3, 4});
  if (m.decomposition.a_tuple() != std::vector<int>{0, -3, 3}) f.add("minor a = " + vec_str(m.decomposition.a_tuple()));
  if (m.decomposition.b_tuple() != std::vector<int>{3, 9, 6}) f.add("minor b = " + vec_str(m.decomposition.b_tuple()));
  SkewShape rebuilt = shape_from_tuples(dec.ribbon(), {0, -3, 3}, {3, 9, 6});
  RibbonDecomposition again = decompose(rebuilt, dec.ribbon());
  if (again.a_tuple() != std::vector<int>{0, -3, 3} || again.b_tuple() != std::vector<int>{3, 9, 6})
    f.add("round trip gives " + vec_str(again.a_tuple()) + "/" + vec_str(again.b_tuple()));
  if (!(minor(rm.matrix, {0, 2, 3}, {0, 2, 3}) == skew_schur(rebuilt, 4))) f.add("minor differs from s_shape");
  return f.outcome("tuples pinned; {1,3,4} minor is " + rebuilt.str() + " and round-trips");
}

Outcome three_way() {
  const int N = 4;
  Failures f;
  int checked = 0;
  for (const auto& dec : corpus()) {
    if (dec.length() > 4) continue;
    auto def = immanants(dec, N, ImmRoute::Definition);
    auto shuf = imm_by_shuffle_all(dec, N);
    auto cov = imm_by_covers_all(dec, N);
    for (const auto& tau : all_matchings(dec.length())) {
      SymPoly zero(N);
      auto get = [&](const std::map<NoncrossingMatching, SymPoly>& m) {
        auto it = m.find(tau);
        return it == m.end() ? zero : it->second;
      };
      SymPoly a = get(def), b = get(shuf), c = get(cov);
      if (!(a == b) || !(a == c)) f.add(instance_str(dec) + " type " + tau.str());
      ++checked;
    }
  }
  return f.outcome(std::to_string(checked) + " (instance, type) pairs agree across three routes at N = 4");
}

SymPoly odd_even_product(const SFMatrix& A) {
  std::vector<int> odd, even;
  for (int i = 0; i < A.n(); ++i) (i % 2 == 0 ? odd : even).push_back(i);
  return minor(A, odd, odd) * minor(A, even, even);
}

Outcome complementary_minors() {
  Failures f;
  SweepOptions opts;
  opts.kind = SweepKind::Cor35;
  SweepReport r = run_sweep(opts);
  for (const auto& it : r.items)
    if (!it.skipped && !it.pass) f.add(it.shape + " " + it.ribbon);

  std::mt19937 rng(20240611);
  int random_checked = 0;
  for (int t = 0; t < 50; ++t) {
    int n = 1 + t % 4;
    SFMatrix A = testing::random_matrix(rng, n, 3);
    SymPoly sum(3);
    for (auto& [tau, p] : imm_tl_all(A)) sum += p;
    if (!(sum == odd_even_product(A))) f.add("random matrix #" + std::to_string(t));
    ++random_checked;
  }

  int general = 0;
  for (int n = 1; n <= 3; ++n) {
    for (int t = 0; t < 4; ++t) {
      SFMatrix A = testing::random_matrix(rng, n, 3);
      auto imms = imm_tl_all(A);
      for (unsigned im = 0; im < (1u << n); ++im)
        for (unsigned jm = 0; jm < (1u << n); ++jm) {
          if (std::popcount(im) != std::popcount(jm)) continue;
          std::vector<int> I, J, Ic, Jc;
          for (int k = 0; k < n; ++k) {
            ((im >> k) & 1u ? I : Ic).push_back(k + 1);
            ((jm >> k) & 1u ? J : Jc).push_back(k + 1);
          }
          SymPoly lhs = minor(A, zero_based(I), zero_based(J)) * minor(A, zero_based(Ic), zero_based(Jc));
          SymPoly rhs(3);
          for (auto& [tau, p] : imms)
            if (compatible(tau, I, J)) rhs += p;
          if (!(lhs == rhs)) f.add("n=" + std::to_string(n) + " I=" + vec_str(I) + " J=" + vec_str(J));
          ++general;
        }
    }
  }
  std::ostringstream ok;
  ok << r.passed << " corpus matrices (" << r.skipped << " with more than 6 sections skipped), " << random_checked
     << " random matrices, " << general << " general (I,J) cases";
  return f.outcome(ok.str());
}

Outcome theorem_positivity() {
  Failures f;
  int types = 0, instances = 0, truncated = 0;
  for (const auto& dec : corpus()) {
    // Seven or eight sections: too many permutations for the definition and
    // too many fillings at N = |shape|, so these use shuffle tableaux at N = 4.
    const bool long_one = dec.length() > 6;
    const int N = long_one ? 4 : dec.shape().size();
    ImmRoute route = long_one ? ImmRoute::Shuffle : ImmRoute::Definition;
    if (long_one) ++truncated;
    PositivityReport r = theorem1_harness(dec, N, route);
    auto crystal = schur_expand_by_crystal(dec, N);
    for (const auto& t : r.types) {
      ++types;
      if (!t.positive) f.add(instance_str(dec) + " type " + t.type.str() + ": " + t.expansion.str());
      auto it = crystal.find(t.type);
      SchurExpansion c = it == crystal.end() ? SchurExpansion(N) : it->second;
      if (!(c == t.expansion)) f.add(instance_str(dec) + " type " + t.type.str() + " crystal " + c.str());
    }
    for (const auto& [tau, e] : crystal) {
      bool found = std::any_of(r.types.begin(), r.types.end(), [&](const TypeReport& t) { return t.type == tau; });
      if (!found && !e.is_zero()) f.add(instance_str(dec) + " crystal-only type " + tau.str());
    }
    ++instances;
  }
  return f.outcome(std::to_string(types) + " immanants over " + std::to_string(instances) +
                   " matrices are Schur positive and match Yamanouchi counts (" + std::to_string(truncated) +
                   " matrices with more than 6 sections checked at N = 4)");
}

Outcome negative_controls() {
  Failures f;
  SFMatrix A13 = fixture_matrix("remark_1_3", 13);
  SchurExpansion e13 = expand_schur(imm_kl(Permutation::parse("2143"), A13));
  if (e13.negative_terms().empty()) f.add("Imm_2143 has no negative coefficient");
  SFMatrix A27 = fixture_matrix("remark_2_7", 14);
  SymPoly m = minor(A27, {0, 1, 3}, {0, 1, 2});
  SchurExpansion e27 = expand_schur(m);
  if (e27.negative_terms().empty()) f.add("minor has no negative coefficient");
  SchurExpansion prod = expand_schur(m * minor(A27, {2}, {3}));
  if (!prod.schur_positive()) f.add("complementary product " + prod.str());
  std::ostringstream ok;
  ok << "Imm_2143 has " << e13.negative_terms().size() << " negative terms, the {1,2,4}x{1,2,3} minor has "
     << e27.negative_terms().size() << ", complementary product = " << prod.str();
  return f.outcome(ok.str());
}

Outcome reading_words() {
  Failures f;
  auto d38 = std::make_shared<const ShuffleDiagram>(
      ShuffleDiagram::from_shapes(SkewShape({7, 6, 2}, {2, 1}), SkewShape({6, 3}, {1})));
  ShuffleTableau T{d38, {1, 1, 1, 1, 2, 1, 2, 2, 2, 3, 2, 2}, {1, 2, 3, 3, 3, 2, 2, 3}};
  if (!T.valid()) f.add("reading-word tableau is not valid");
  if (reading_word(T, 1).letters != std::vector<int>{2, 2, 2, 1, 2}) f.add("w1 = " + vec_str(reading_word(T, 1).letters));
  if (reading_word(T, 2).letters != std::vector<int>{2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 2})
    f.add("w2 = " + vec_str(reading_word(T, 2).letters));

  RibbonDecomposition dec = testing::example_decomposition();
  DiagramPtr d = build_diagram(dec);
  ShuffleTableau U{d, {3, 4, 6, 6, 1, 3, 6, 2, 4, 5, 2, 3, 6, 6, 7}, {2, 2, 5, 5, 6, 6, 4, 5, 5, 7, 5, 7}};
  if (!U.valid()) f.add("type tableau is not valid");
  NoncrossingMatching expected = diagram_mul(generator(4, 3), generator(4, 2)).matching;
  NoncrossingMatching type = tl_type(U);
  if (!(type == expected)) f.add("tl_type = " + type.str());
  RibbonNetwork net(dec, 7);
  ColoredCover x = cover_from_tableau(net, U);
  if (!(uncross_type(net, x) == type)) f.add("cover type = " + uncross_type(net, x).str());
  if (!(tableau_from_cover(net, d, x) == U)) f.add("cover does not round-trip");
  return f.outcome("w1, w2 pinned; type " + type.str() + " agrees with the uncrossed cover");
}

std::size_t find_tableau(const std::vector<ShuffleTableau>& all, const ShuffleTableau& T) {
  auto it = std::lower_bound(all.begin(), all.end(), T);
  return it != all.end() && *it == T ? static_cast<std::size_t>(it - all.begin()) : all.size();
}

Outcome crystal_properties() {
  const int N = 4;
  Failures f;
  long long tableaux = 0, components = 0;
  for (const auto& dec : corpus()) {
    DiagramPtr d = build_diagram(dec);
    std::vector<ShuffleTableau> all = enumerate_shuffle_tableaux(d, N);
    std::sort(all.begin(), all.end());
    const std::size_t n = all.size();
    tableaux += static_cast<long long>(n);
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    std::vector<NoncrossingMatching> types(n);
    for (std::size_t t = 0; t < n; ++t) types[t] = tl_type(all[t]);
    std::vector<char> source(n, 1);
    const std::string where = instance_str(dec);
    try {
      for (std::size_t t = 0; t < n; ++t) {
        const ShuffleTableau& T = all[t];
        std::vector<int> wt = T.weight(N);
        for (int i = 1; i < N; ++i) {
          if (auto F = crystal_F(T, i, N)) {
            std::size_t u = find_tableau(all, *F);
            std::vector<int> fw = F->weight(N);
            if (u == n) f.add(where + ": F_" + std::to_string(i) + " leaves the tableau set");
            else {
              parent[root(u)] = root(t);
              if (!(types[u] == types[t])) f.add(where + ": F_" + std::to_string(i) + " changes the type");
            }
            auto back = crystal_E(*F, i);
            if (!back || !(*back == T)) f.add(where + ": E_" + std::to_string(i) + " F_" + std::to_string(i) + " != id");
            if (fw[static_cast<std::size_t>(i - 1)] != wt[static_cast<std::size_t>(i - 1)] - 1 ||
                fw[static_cast<std::size_t>(i)] != wt[static_cast<std::size_t>(i)] + 1)
              f.add(where + ": F_" + std::to_string(i) + " weight shift");
          }
          if (auto E = crystal_E(T, i)) {
            source[t] = 0;
            std::vector<int> ew = E->weight(N);
            auto back = crystal_F(*E, i, N);
            if (!back || !(*back == T)) f.add(where + ": F_" + std::to_string(i) + " E_" + std::to_string(i) + " != id");
            if (ew[static_cast<std::size_t>(i - 1)] != wt[static_cast<std::size_t>(i - 1)] + 1 ||
                ew[static_cast<std::size_t>(i)] != wt[static_cast<std::size_t>(i)] - 1)
              f.add(where + ": E_" + std::to_string(i) + " weight shift");
          }
        }
      }
    } catch (const ValidityError& e) {
      f.add(where + ": " + e.what());
      continue;
    }
    std::map<std::size_t, std::vector<std::size_t>> comp;
    for (std::size_t t = 0; t < n; ++t) comp[root(t)].push_back(t);
    for (const auto& [r, members] : comp) {
      ++components;
      std::vector<std::size_t> sources;
      MonomialAccumulator acc(N);
      for (std::size_t t : members) {
        if (source[t]) sources.push_back(t);
        acc.add(all[t].weight(N));
      }
      if (sources.size() != 1) {
        f.add(where + ": component with " + std::to_string(sources.size()) + " sources");
        continue;
      }
      std::vector<int> wt = all[sources[0]].weight(N);
      if (!std::is_sorted(wt.rbegin(), wt.rend())) {
        f.add(where + ": source weight " + vec_str(wt) + " is not a partition");
        continue;
      }
      if (!(acc.to_sympoly() == schur_poly(Partition(wt), N))) f.add(where + ": component character differs");
    }
  }
  std::ostringstream ok;
  ok << tableaux << " tableaux in " << components << " components over " << corpus().size() << " instances at N = 4";
  return f.outcome(ok.str());
}

Outcome kl_gates() {
  Failures f;
  const KLTable& t4 = kl_polynomials(4);
  int pairs = 0;
  for (const auto& x : t4.perms())
    for (const auto& w : t4.perms()) {
      if (t4.poly(x, w) != kl_poly_bar_solve(x, w)) f.add("P(" + x.str() + "," + w.str() + ")");
      ++pairs;
    }
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    int n = 1 + t % 5;
    SFMatrix A = testing::random_matrix(rng, n, 3);
    if (!(imm_kl(Permutation::identity(n), A) == determinant(A))) f.add("Imm_e != det on random matrix");
  }
  SFMatrix A13 = fixture_matrix("remark_1_3", 13);
  if (!(imm_kl(Permutation::identity(4), A13) == determinant(A13))) f.add("Imm_e != det on the fixture");
  Permutation w = Permutation::parse("2143");
  if (!(imm_kl(w, A13) == imm_tl(perm_to_matching(w), A13))) f.add("Imm_2143 differs from the TL immanant");

  SweepOptions opts;
  opts.kind = SweepKind::Conjecture12;
  opts.max_length = 4;
  SweepReport r = run_sweep(opts);
  for (const auto& it : r.items)
    if (!it.skipped && !it.pass) f.add("negative certificate " + it.shape + " " + it.ribbon + ": " + it.detail);
  std::ostringstream ok;
  ok << pairs << " S_4 pairs match the bar solve, anchors hold, " << r.passed << " corpus matrices with at most 4"
     << " sections have Schur positive KL immanants";
  return f.outcome(ok.str());
}

Outcome counts() {
  Failures f;
  long long catalan = 1;
  for (int n = 1; n <= 7; ++n) {
    catalan = catalan * 2 * (2 * n - 1) / (n + 1);
    auto perms = enumerate_321_avoiding(n);
    std::set<NoncrossingMatching> distinct;
    for (const auto& u : perms) distinct.insert(perm_to_matching(u));
    if (static_cast<long long>(perms.size()) != catalan || static_cast<long long>(distinct.size()) != catalan)
      f.add("n=" + std::to_string(n) + ": " + std::to_string(perms.size()) + " permutations");
  }
  long long covers = 0;
  for (const auto& dec : corpus()) {
    if (dec.length() > 3) continue;
    DiagramPtr d = build_diagram(dec);
    for (int N = 1; N <= 3; ++N) {
      RibbonNetwork net(dec, N);
      std::vector<ShuffleTableau> tabs = enumerate_shuffle_tableaux(d, N);
      std::sort(tabs.begin(), tabs.end());
      std::vector<ShuffleTableau> images;
      for_each_cover(net, [&](const ColoredCover& x) { images.push_back(tableau_from_cover(net, d, x)); });
      covers += static_cast<long long>(images.size());
      std::sort(images.begin(), images.end());
      if (images != tabs)
        f.add(instance_str(dec) + " N=" + std::to_string(N) + ": " + std::to_string(images.size()) + " covers vs " +
              std::to_string(tabs.size()) + " tableaux");
    }
  }
  return f.outcome("Catalan counts hold for n <= 7; " + std::to_string(covers) +
                   " covers map bijectively onto shuffle tableaux for N <= 3");
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> all{
      {1, "determinant identity over the corpus", determinant_identity},
      {2, "worked example tuples and minor", example_pin},
      {3, "three-way immanant agreement", three_way},
      {4, "complementary minor identity", complementary_minors},
      {5, "Temperley-Lieb immanant positivity", theorem_positivity},
      {6, "negative controls", negative_controls},
      {7, "reading words and strand type", reading_words},
      {8, "crystal properties", crystal_properties},
      {9, "Kazhdan-Lusztig gates", kl_gates},
      {10, "combinatorial counts", counts},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failed = 0;
  for (const auto& c : all) {
    if (!only.empty() && !only.count(c.id)) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s [%d] %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
