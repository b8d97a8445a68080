#include "ribbonimm/ribbonmat.hpp"

#include <algorithm>
#include <chrono>

#include "json.hpp"
#include "ribbonimm/errors.hpp"
#include "ribbonimm/fixture_data.hpp"
#include "ribbonimm/network.hpp"
#include "ribbonimm/shuffle.hpp"

namespace ril {

std::optional<SkewShape> entry_shape(const RibbonDecomposition& dec, int i, int j) {
  int a = dec.sections()[static_cast<std::size_t>(j)].a;
  int b = dec.sections()[static_cast<std::size_t>(i)].b;
  if (a >= b) return std::nullopt;
  return ribbon_section_shape(dec.ribbon(), a, b);
}

RibbonMatrix build(const RibbonDecomposition& dec, int N) {
  const int l = dec.length();
  SFMatrix M(l, N);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      int a = dec.sections()[static_cast<std::size_t>(j)].a;
      int b = dec.sections()[static_cast<std::size_t>(i)].b;
      if (a < b) M.set(i, j, skew_schur(ribbon_section_shape(dec.ribbon(), a, b), N));
      else if (a == b) M.set(i, j, SymPoly::one(N));
    }
  return {dec, N, std::move(M)};
}

bool check_determinant(const RibbonMatrix& rm) {
  return determinant(rm.matrix) == skew_schur(rm.decomposition.shape(), rm.nvars);
}

RibbonMatrix principal_minor(const RibbonMatrix& rm, const std::vector<int>& I) {
  const int l = rm.decomposition.length();
  if (I.empty()) throw InvalidInput("principal minor needs a nonempty index set");
  std::vector<int> sorted = I;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.front() < 1 || sorted.back() > l)
    throw InvalidInput("principal minor indices must be distinct and within 1.." + std::to_string(l));
  std::vector<int> a, b, zero_based;
  for (int i : sorted) {
    a.push_back(rm.decomposition.sections()[static_cast<std::size_t>(i - 1)].a);
    b.push_back(rm.decomposition.sections()[static_cast<std::size_t>(i - 1)].b);
    zero_based.push_back(i - 1);
  }
  SkewShape shape;
  try {
    shape = shape_from_tuples(rm.decomposition.ribbon(), a, b);
  } catch (const NotSkew& e) {
    throw InternalError(std::string("contracted sections are not a skew shape: ") + e.what());
  }
  RibbonDecomposition dec = decompose(shape, rm.decomposition.ribbon());
  if (dec.a_tuple() != a || dec.b_tuple() != b) throw InternalError("contracted shape does not reproduce its tuples");
  RibbonMatrix out = build(dec, rm.nvars);
  if (!(out.matrix == rm.matrix.submatrix(zero_based, zero_based)))
    throw InternalError("principal minor differs from the rebuilt matrix");
  return out;
}

std::vector<int> odd_indices(int l) {
  std::vector<int> v;
  for (int k = 1; k <= l; k += 2) v.push_back(k);
  return v;
}

std::vector<int> even_indices(int l) {
  std::vector<int> v;
  for (int k = 2; k <= l; k += 2) v.push_back(k);
  return v;
}

std::pair<SkewShape, SkewShape> odd_even_split(const RibbonDecomposition& dec) {
  auto pick = [&](const std::vector<int>& idx) {
    if (idx.empty()) return SkewShape();
    std::vector<int> a, b;
    for (int k : idx) {
      a.push_back(dec.sections()[static_cast<std::size_t>(k - 1)].a);
      b.push_back(dec.sections()[static_cast<std::size_t>(k - 1)].b);
    }
    try {
      return shape_from_tuples(dec.ribbon(), a, b);
    } catch (const NotSkew& e) {
      throw InternalError(std::string("odd/even sections are not a skew shape: ") + e.what());
    }
  };
  return {pick(odd_indices(dec.length())), pick(even_indices(dec.length()))};
}

ImmRoute parse_route(const std::string& name) {
  if (name == "def" || name == "definition") return ImmRoute::Definition;
  if (name == "shuffle") return ImmRoute::Shuffle;
  if (name == "covers") return ImmRoute::Covers;
  if (name == "crystal") return ImmRoute::Crystal;
  throw InvalidInput("unknown method '" + name + "' (expected def, shuffle, covers or crystal)");
}

std::string route_name(ImmRoute r) {
  switch (r) {
    case ImmRoute::Definition: return "def";
    case ImmRoute::Shuffle: return "shuffle";
    case ImmRoute::Covers: return "covers";
    case ImmRoute::Crystal: return "crystal";
  }
  return "def";
}

std::map<NoncrossingMatching, SymPoly> immanants(const RibbonDecomposition& dec, int N, ImmRoute route) {
  switch (route) {
    case ImmRoute::Definition: return imm_tl_all(build(dec, N).matrix);
    case ImmRoute::Shuffle: return imm_by_shuffle_all(dec, N);
    case ImmRoute::Covers: return imm_by_covers_all(dec, N);
    case ImmRoute::Crystal: {
      std::map<NoncrossingMatching, SymPoly> out;
      for (auto& [tau, e] : schur_expand_by_crystal(dec, N)) out.emplace(tau, e.to_sympoly());
      return out;
    }
  }
  throw InvalidInput("unknown route");
}

PositivityReport theorem1_harness(const RibbonDecomposition& dec, int N, ImmRoute route) {
  using clock = std::chrono::steady_clock;
  PositivityReport report;
  report.nvars = N;
  report.route = route_name(route);
  if (route == ImmRoute::Crystal) {
    auto t0 = clock::now();
    auto expansions = schur_expand_by_crystal(dec, N);
    double per = std::chrono::duration<double>(clock::now() - t0).count() / std::max<std::size_t>(1, expansions.size());
    for (auto& [tau, e] : expansions) {
      TypeReport t{tau, e, e.schur_positive(), per};
      report.pass = report.pass && t.positive;
      report.types.push_back(std::move(t));
    }
    return report;
  }
  auto t0 = clock::now();
  auto imms = immanants(dec, N, route);
  double share = std::chrono::duration<double>(clock::now() - t0).count() / std::max<std::size_t>(1, imms.size());
  for (auto& [tau, p] : imms) {
    auto t1 = clock::now();
    SchurExpansion e = expand_schur(p);
    TypeReport t{tau, e, e.schur_positive(), share + std::chrono::duration<double>(clock::now() - t1).count()};
    report.pass = report.pass && t.positive;
    report.types.push_back(std::move(t));
  }
  return report;
}

const std::string& fixture_text() {
  static const std::string text = detail::kRemarkFixture;
  return text;
}

std::vector<FixtureEntry> fixture_entries(const std::string& name) {
  static const nlohmann::json doc = nlohmann::json::parse(fixture_text());
  if (!doc.contains(name) || name == "version") throw InvalidInput("unknown fixture '" + name + "'");
  std::vector<FixtureEntry> out;
  for (const auto& e : doc.at(name).at("entries")) {
    FixtureEntry f;
    f.row = e.at("row").get<int>();
    f.col = e.at("col").get<int>();
    if (e.contains("const")) {
      f.constant = e.at("const").get<int>();
    } else {
      f.shape = SkewShape(Partition(e.at("outer").get<std::vector<int>>()), Partition(e.at("inner").get<std::vector<int>>()));
    }
    out.push_back(std::move(f));
  }
  return out;
}

SFMatrix fixture_matrix(const std::string& name, int N) {
  auto entries = fixture_entries(name);
  int n = 0;
  for (const auto& e : entries) n = std::max({n, e.row, e.col});
  SFMatrix M(n, N);
  for (const auto& e : entries) {
    if (e.shape) M.set(e.row - 1, e.col - 1, skew_schur(*e.shape, N));
    else M.set(e.row - 1, e.col - 1, SymPoly::constant(N, e.constant));
  }
  return M;
}

RemarkMatrices remark_matrices(int N) {
  return {fixture_matrix("remark_1_3", N), fixture_matrix("remark_2_7", N)};
}

}  // namespace ril
