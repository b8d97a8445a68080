#include <random>
#include <sstream>

#include "doctest.h"
#include "ribbonimm/corpus.hpp"
#include "ribbonimm/errors.hpp"
#include "ribbonimm/klbase.hpp"
#include "support.hpp"

using namespace ril;

namespace {

QPoly P(const KLTable& t, const char* x, const char* w) { return t.poly(Permutation::parse(x), Permutation::parse(w)); }

}  // namespace

TEST_CASE("Bruhat order") {
  CHECK(bruhat_leq(Permutation::parse("312"), Permutation::parse("321")));
  CHECK_FALSE(bruhat_leq(Permutation::parse("321"), Permutation::parse("312")));
  CHECK_FALSE(bruhat_leq(Permutation::parse("231"), Permutation::parse("312")));
  for (int n = 1; n <= 4; ++n)
    for (const auto& x : Permutation::all(n))
      for (const auto& w : Permutation::all(n)) {
        bool a = bruhat_leq(x, w);
        CHECK(a == bruhat_leq_tableau(x, w));
        if (a && x != w) CHECK(x.length() < w.length());
        CHECK(bruhat_leq(Permutation::identity(n), w));
        CHECK(bruhat_leq(w, Permutation::longest(n)));
      }
}

TEST_CASE("polynomials in small rank") {
  for (int n = 1; n <= 3; ++n) {
    const KLTable& t = kl_polynomials(n);
    for (const auto& x : t.perms())
      for (const auto& w : t.perms())
        CHECK(t.poly(x, w) == (bruhat_leq(x, w) ? QPoly{1} : QPoly{}));
  }
  const KLTable& t4 = kl_polynomials(4);
  CHECK(P(t4, "1324", "3412") == QPoly{1, 1});
  CHECK(P(t4, "2143", "4231") == QPoly{1, 1});
  CHECK(P(t4, "1234", "3412") == QPoly{1, 1});
  CHECK(P(t4, "1234", "4321") == QPoly{1});
  CHECK(qpoly_str(P(t4, "1324", "3412")) == "1 + q");
  CHECK(qpoly_str({}) == "0");
  CHECK(qpoly_str({1, 0, 2}) == "1 + 2q^2");
  CHECK(qpoly_at_one({1, 1, 3}) == 5);
  CHECK(t4.mu(Permutation::parse("1324"), Permutation::parse("3412")) == 1);
  CHECK_THROWS_AS(KLTable(8), InvalidInput);
}

TEST_CASE("structural properties on S4 and S5") {
  for (int n : {4, 5}) {
    const KLTable& t = kl_polynomials(n);
    for (const auto& x : t.perms())
      for (const auto& w : t.perms()) {
        const QPoly& p = t.poly(x, w);
        if (!t.leq(x, w)) {
          CHECK(p.empty());
          continue;
        }
        REQUIRE_FALSE(p.empty());
        CHECK(p[0] == 1);
        int d = w.length() - x.length();
        if (d <= 2) CHECK(p == QPoly{1});
        if (x != w) CHECK(2 * (static_cast<int>(p.size()) - 1) <= d - 1);
        for (long long c : p) CHECK(c >= 0);
        CHECK(t.poly(x.inverse(), w.inverse()) == p);
        if (n == 4) CHECK(kl_poly_bar_solve(x, w) == p);
      }
  }
}

TEST_CASE("table dump") {
  const KLTable& t = kl_polynomials(3);
  std::istringstream in(t.dump());
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    CHECK(line.find(" : ") != std::string::npos);
  }
  int pairs = 0;
  for (const auto& x : t.perms())
    for (const auto& w : t.perms()) pairs += bruhat_leq(x, w) ? 1 : 0;
  CHECK(lines == pairs);
  CHECK(t.dump().find("123 321 : 1") != std::string::npos);
}

TEST_CASE("Kazhdan-Lusztig immanants") {
  std::mt19937 rng(5);
  for (int n = 1; n <= 4; ++n) {
    SFMatrix A = testing::random_matrix(rng, n, 2);
    CHECK(imm_kl(Permutation::identity(n), A) == determinant(A));
    SymPoly anti = SymPoly::one(2);
    for (int i = 0; i < n; ++i) anti = anti * A.at(i, n - 1 - i);
    CHECK(imm_kl(Permutation::longest(n), A) == anti);
    CHECK(kl_reconstruction_exact(A));
    CHECK(kl_tl_crosscheck(A).empty());
    auto all = imm_kl_all(A);
    CHECK(all.size() == Permutation::all(n).size());
  }
}

TEST_CASE("positivity on ribbon matrices") {
  for (const auto& dec : generate_corpus({4, 3})) {
    if (dec.length() > 2) continue;
    KLReport r = conjecture12_harness(dec, dec.shape().size());
    CHECK(r.pass());
    CHECK(r.terms.size() == Permutation::all(dec.length()).size());
  }
}

TEST_CASE("the first remark fixture has a negative term") {
  RemarkMatrices rm = remark_matrices(4);
  KLReport r = kl_positivity(rm.remark_1_3);
  CHECK_FALSE(r.pass());
  bool found = false;
  for (const auto& c : r.negatives) found = found || c.w == Permutation::parse("2143");
  CHECK(found);
}
