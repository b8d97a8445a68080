#include "ribbonimm/shuffle.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <set>

#include "ribbonimm/budget.hpp"
#include "ribbonimm/errors.hpp"

namespace ril {

namespace {

Cell grid_of(const InfiniteRibbon& R, int section, int content) {
  Cell r = R.box(content);
  return {2 * r.row + section, 2 * r.col + section};
}

}  // namespace

ShuffleDiagram::ShuffleDiagram(const RibbonDecomposition& dec) : dec_(dec) {
  const auto& R = dec_->ribbon();
  const int l = dec_->length();
  auto build_color = [&](Color color, SkewShape& shape, std::vector<DiagramCell>& cells) {
    std::vector<int> idx = color == Color::Red ? odd_indices(l) : even_indices(l);
    if (idx.empty()) return;
    std::vector<int> a, b;
    for (int k : idx) {
      a.push_back(dec_->sections()[static_cast<std::size_t>(k - 1)].a);
      b.push_back(dec_->sections()[static_cast<std::size_t>(k - 1)].b);
    }
    PlacedSections placed;
    try {
      placed = place_sections(R, a, b);
    } catch (const NotSkew& e) {
      throw InternalError(std::string("odd/even sections are not a skew shape: ") + e.what());
    }
    shape = placed.shape;
    std::map<Cell, std::pair<int, int>> owner;
    for (std::size_t m = 0; m < idx.size(); ++m)
      for (std::size_t t = 0; t < placed.cells[m].size(); ++t)
        owner[placed.cells[m][t]] = {idx[m], a[m] + static_cast<int>(t)};
    for (const auto& c : shape.cells()) {
      auto [k, content] = owner.at({c.row, c.col});
      cells.push_back({k, content, grid_of(R, k, content)});
    }
  };
  build_color(Color::Red, red_shape_, red_cells_);
  build_color(Color::Blue, blue_shape_, blue_cells_);
  index_cells();
  for (int k = 1; k <= l; ++k) {
    const auto& s = dec_->sections()[static_cast<std::size_t>(k - 1)];
    Cell top = grid_of(R, k, s.b - 1);
    Cell p = R.step(s.b) == StepDir::Below ? Cell{top.row - 1, top.col} : Cell{top.row, top.col + 1};
    nodes_.push_back({true, k, p});
  }
  for (int k = 1; k <= l; ++k) {
    const auto& s = dec_->sections()[static_cast<std::size_t>(k - 1)];
    Cell bottom = grid_of(R, k, s.a);
    Cell q = R.step(s.a) == StepDir::Below ? Cell{bottom.row + 1, bottom.col} : Cell{bottom.row, bottom.col - 1};
    nodes_.push_back({false, k, q});
  }
  build_plan();
}

ShuffleDiagram ShuffleDiagram::from_shapes(const SkewShape& red, const SkewShape& blue) {
  ShuffleDiagram d;
  d.red_shape_ = red;
  d.blue_shape_ = blue;
  for (const auto& c : red.cells()) d.red_cells_.push_back({0, c.content, {2 * c.row - 1, 2 * c.col - 1}});
  for (const auto& c : blue.cells()) d.blue_cells_.push_back({0, c.content, {2 * c.row, 2 * c.col}});
  d.index_cells();
  return d;
}

const RibbonDecomposition& ShuffleDiagram::decomposition() const {
  if (!dec_) throw InvalidInput("the shuffle diagram carries no ribbon decomposition");
  return *dec_;
}

void ShuffleDiagram::index_cells() {
  for (Color color : {Color::Red, Color::Blue}) {
    const auto& cs = cells(color);
    for (std::size_t i = 0; i < cs.size(); ++i) {
      CellRef ref{color, static_cast<int>(i)};
      if (!by_grid_.emplace(cs[i].grid, ref).second) throw InternalError("shuffle cells collide");
      if (cs[i].section > 0) by_section_.emplace(std::make_pair(cs[i].section, cs[i].content), ref);
    }
  }
}

void ShuffleDiagram::build_plan() {
  const auto& R = dec_->ribbon();
  StrandPlan& p = plan_;
  int r0 = 0, r1 = 0, c0 = 0, c1 = 0;
  bool first = true;
  auto extend = [&](Cell g) {
    r0 = first ? g.row : std::min(r0, g.row);
    r1 = first ? g.row : std::max(r1, g.row);
    c0 = first ? g.col : std::min(c0, g.col);
    c1 = first ? g.col : std::max(c1, g.col);
    first = false;
  };
  for (Color color : {Color::Red, Color::Blue})
    for (const auto& c : cells(color)) extend(c.grid);
  for (const auto& n : nodes_) extend(n.grid);
  p.row0 = r0 - 1;
  p.col0 = c0 - 1;
  p.height = r1 - r0 + 3;
  p.width = c1 - c0 + 3;
  const std::size_t area = static_cast<std::size_t>(p.width) * static_cast<std::size_t>(p.height);
  p.node_of.assign(area, -1);
  p.is_cell.assign(area, 0);
  for (std::size_t n = 0; n < nodes_.size(); ++n) {
    int id = p.id(nodes_[n].grid);
    if (p.node_of[static_cast<std::size_t>(id)] != -1)
      throw StrandTraceError("two nodes share the position (" + std::to_string(nodes_[n].grid.row) + "," +
                             std::to_string(nodes_[n].grid.col) + ")");
    p.node_of[static_cast<std::size_t>(id)] = static_cast<int>(n);
  }
  constexpr int kNegInf = std::numeric_limits<int>::min();
  constexpr int kPosInf = std::numeric_limits<int>::max();
  for (Color color : {Color::Red, Color::Blue}) {
    const auto& cs = cells(color);
    for (std::size_t i = 0; i < cs.size(); ++i) {
      Cell g = cs[i].grid;
      int id = p.id(g);
      p.is_cell[static_cast<std::size_t>(id)] = 1;
      p.cell_id.push_back(id);
      StrandPlan::Pair sw, ne;
      if (auto r = at({g.row + 1, g.col - 1})) sw.partner = global_index(*r);
      else sw.sentinel = R.step(cs[i].content) == StepDir::Below ? kNegInf : kPosInf;
      sw.vertical = p.id({g.row + 1, g.col});
      sw.horizontal = p.id({g.row, g.col - 1});
      if (auto r = at({g.row - 1, g.col + 1})) ne.partner = global_index(*r);
      else ne.sentinel = R.step(cs[i].content + 1) == StepDir::Below ? kPosInf : kNegInf;
      ne.vertical = p.id({g.row - 1, g.col});
      ne.horizontal = p.id({g.row, g.col + 1});
      p.sw.push_back(sw);
      p.ne.push_back(ne);
    }
  }
}

std::optional<CellRef> ShuffleDiagram::at(Cell grid) const {
  auto it = by_grid_.find(grid);
  if (it == by_grid_.end()) return std::nullopt;
  return it->second;
}

std::optional<CellRef> ShuffleDiagram::find(int section, int content) const {
  auto it = by_section_.find({section, content});
  if (it == by_section_.end()) return std::nullopt;
  return it->second;
}

DiagramPtr build_diagram(const RibbonDecomposition& dec) { return std::make_shared<const ShuffleDiagram>(dec); }

// ------------------------------------------------------------------ tableau

std::vector<int> ShuffleTableau::weight(int N) const {
  std::vector<int> w(static_cast<std::size_t>(N), 0);
  for (int v : red)
    if (v >= 1 && v <= N) ++w[static_cast<std::size_t>(v - 1)];
  for (int v : blue)
    if (v >= 1 && v <= N) ++w[static_cast<std::size_t>(v - 1)];
  return w;
}

bool ShuffleTableau::valid() const {
  if (red.size() != diagram->red_cells().size() || blue.size() != diagram->blue_cells().size()) return false;
  for (Color color : {Color::Red, Color::Blue}) {
    const auto& cs = diagram->cells(color);
    for (std::size_t i = 0; i < cs.size(); ++i) {
      int v = value(CellRef{color, static_cast<int>(i)});
      if (v < 1) return false;
      Cell g = cs[i].grid;
      if (auto r = diagram->at({g.row, g.col + 2}); r && value(*r) < v) return false;
      if (auto d = diagram->at({g.row + 2, g.col}); d && value(*d) <= v) return false;
    }
  }
  return true;
}

void for_each_shuffle_tableau(const DiagramPtr& d, int N, const std::function<void(const ShuffleTableau&)>& f) {
  auto collect = [&](const SkewShape& shape) {
    std::vector<std::vector<int>> out;
    BudgetMeter meter("SSYT enumeration");
    for_each_ssyt(shape, N, [&](const std::vector<int>& e) {
      meter.tick();
      out.push_back(e);
      return true;
    });
    return out;
  };
  auto reds = collect(d->red_shape());
  auto blues = collect(d->blue_shape());
  BudgetMeter meter("shuffle tableau enumeration");
  meter.tick(static_cast<std::uint64_t>(reds.size()) * blues.size());
  ShuffleTableau T{d, {}, {}};
  for (const auto& r : reds) {
    T.red = r;
    for (const auto& b : blues) {
      T.blue = b;
      f(T);
    }
  }
}

std::vector<ShuffleTableau> enumerate_shuffle_tableaux(const DiagramPtr& d, int N) {
  std::vector<ShuffleTableau> out;
  for_each_shuffle_tableau(d, N, [&](const ShuffleTableau& T) { out.push_back(T); });
  return out;
}

// ------------------------------------------------------------------ tl_type

NoncrossingMatching tl_type(const ShuffleTableau& T) {
  const ShuffleDiagram& d = *T.diagram;
  if (!d.has_ribbon()) throw InvalidInput("a bare shuffle diagram has no nodes to match");
  const StrandPlan& p = d.plan();
  const std::size_t area = static_cast<std::size_t>(p.width) * static_cast<std::size_t>(p.height);
  thread_local std::vector<std::array<int, 3>> adj;
  thread_local std::vector<int> touched;
  if (adj.size() < area) adj.resize(area);
  for (int id : touched) adj[static_cast<std::size_t>(id)][2] = 0;
  touched.clear();
  auto link = [&](int u, int v) {
    for (int x : {u, v}) {
      auto& a = adj[static_cast<std::size_t>(x)];
      if (a[2] == 0) touched.push_back(x);
      if (a[2] < 2) a[static_cast<std::size_t>(a[2])] = x == u ? v : u;
      ++a[2];
    }
  };
  const int nred = static_cast<int>(T.red.size());
  auto val = [&](int g) { return g < nred ? T.red[static_cast<std::size_t>(g)] : T.blue[static_cast<std::size_t>(g - nred)]; };
  const int ncells = nred + static_cast<int>(T.blue.size());
  for (int g = 0; g < ncells; ++g) {
    int v = val(g);
    int id = p.cell_id[static_cast<std::size_t>(g)];
    const auto& sw = p.sw[static_cast<std::size_t>(g)];
    int i = sw.partner >= 0 ? val(sw.partner) : sw.sentinel;
    link(id, i <= v ? sw.vertical : sw.horizontal);
    const auto& ne = p.ne[static_cast<std::size_t>(g)];
    int j = ne.partner >= 0 ? val(ne.partner) : ne.sentinel;
    link(id, v <= j ? ne.vertical : ne.horizontal);
  }
  auto where = [&](int id) {
    return "(" + std::to_string(id / p.width + p.row0) + "," + std::to_string(id % p.width + p.col0) + ")";
  };
  for (int id : touched) {
    if (p.is_cell[static_cast<std::size_t>(id)]) continue;
    int deg = adj[static_cast<std::size_t>(id)][2];
    bool is_node = p.node_of[static_cast<std::size_t>(id)] >= 0;
    if (deg > 2 || (is_node && deg != 1) || (!is_node && deg != 2))
      throw StrandTraceError("hole " + where(id) + " has degree " + std::to_string(deg));
  }
  const auto& nodes = d.nodes();
  const int l = d.length();
  std::vector<int> partner(static_cast<std::size_t>(2 * l), -1);
  auto point = [&](const DiagramNode& n) { return n.is_p ? n.k - 1 : l + n.k - 1; };
  for (const auto& start : nodes) {
    int pt = point(start);
    if (partner[static_cast<std::size_t>(pt)] != -1) continue;
    int sid = p.id(start.grid);
    if (adj[static_cast<std::size_t>(sid)][2] != 1) throw StrandTraceError("node " + where(sid) + " without a strand");
    int prev = sid, cur = adj[static_cast<std::size_t>(sid)][0];
    std::size_t guard = 0;
    while (p.node_of[static_cast<std::size_t>(cur)] < 0) {
      const auto& a = adj[static_cast<std::size_t>(cur)];
      int next = a[0] == prev ? a[1] : a[0];
      prev = cur;
      cur = next;
      if (++guard > 2 * touched.size() + 4) throw StrandTraceError("strand does not terminate");
    }
    int q = point(nodes[static_cast<std::size_t>(p.node_of[static_cast<std::size_t>(cur)])]);
    if (q == pt) throw StrandTraceError("strand returns to its starting node");
    partner[static_cast<std::size_t>(pt)] = q;
    partner[static_cast<std::size_t>(q)] = pt;
  }
  try {
    return NoncrossingMatching(std::move(partner));
  } catch (const InvalidInput& e) {
    throw StrandTraceError(std::string("strands do not form a noncrossing matching: ") + e.what());
  }
}

// ---------------------------------------------------------- reading words

ReadingWord reading_word(const ShuffleTableau& T, int i) {
  const ShuffleDiagram& d = *T.diagram;
  std::map<int, std::vector<CellRef>> by_column;
  for (Color color : {Color::Red, Color::Blue}) {
    const auto& cs = d.cells(color);
    for (std::size_t idx = 0; idx < cs.size(); ++idx) {
      CellRef ref{color, static_cast<int>(idx)};
      int v = T.value(ref);
      if (v == i || v == i + 1) by_column[cs[idx].grid.col].push_back(ref);
    }
  }
  std::vector<CellRef> kept;
  for (auto& [col, refs] : by_column) {
    bool has_i = false, has_j = false;
    for (auto r : refs) (T.value(r) == i ? has_i : has_j) = true;
    // Column strictness leaves at most one i above one i+1: an overlap pair.
    if (has_i && has_j) continue;
    kept.insert(kept.end(), refs.begin(), refs.end());
  }
  auto grid = [&](CellRef r) { return d.cells(r.color)[static_cast<std::size_t>(r.index)].grid; };
  std::sort(kept.begin(), kept.end(), [&](CellRef a, CellRef b) {
    Cell ga = grid(a), gb = grid(b);
    if (ga.row != gb.row) return ga.row > gb.row;
    return ga.col < gb.col;
  });
  ReadingWord w;
  w.i = i;
  for (auto r : kept) {
    w.letters.push_back(T.value(r));
    w.cells.push_back(r);
  }
  return w;
}

namespace {

struct Brackets {
  std::vector<std::size_t> open;    // unmatched i+1 positions, left to right
  std::vector<std::size_t> closed;  // unmatched i positions, left to right
};

Brackets match_brackets(const ReadingWord& w) {
  Brackets b;
  for (std::size_t p = 0; p < w.letters.size(); ++p) {
    if (w.letters[p] == w.i + 1) {
      b.open.push_back(p);
    } else if (!b.open.empty()) {
      b.open.pop_back();
    } else {
      b.closed.push_back(p);
    }
  }
  return b;
}

}  // namespace

std::optional<ShuffleTableau> crystal_E(const ShuffleTableau& T, int i) {
  if (i < 1) throw InvalidInput("crystal index must be positive");
  ReadingWord w = reading_word(T, i);
  Brackets b = match_brackets(w);
  if (b.open.empty()) return std::nullopt;
  ShuffleTableau out = T;
  out.value(w.cells[b.open.front()]) = i;
  if (!out.valid()) throw ValidityError("E_" + std::to_string(i) + " produced an invalid filling");
  return out;
}

std::optional<ShuffleTableau> crystal_F(const ShuffleTableau& T, int i, int N) {
  if (i < 1 || i >= N) throw InvalidInput("crystal index must lie in 1..N-1");
  ReadingWord w = reading_word(T, i);
  Brackets b = match_brackets(w);
  if (b.closed.empty()) return std::nullopt;
  ShuffleTableau out = T;
  out.value(w.cells[b.closed.back()]) = i + 1;
  if (!out.valid()) throw ValidityError("F_" + std::to_string(i) + " produced an invalid filling");
  return out;
}

bool is_yamanouchi(const ShuffleTableau& T, int N) {
  for (int i = 1; i < N; ++i)
    if (!match_brackets(reading_word(T, i)).open.empty()) return false;
  return true;
}

void for_each_yamanouchi(const DiagramPtr& d, int N, const std::function<void(const ShuffleTableau&)>& f) {
  // Fill cells in reverse reading order (rows top to bottom, each row right
  // to left).  balance[i] bounds #i - #(i+1) over the filled suffix of the
  // i-reading word from above; it must stay nonnegative.
  std::vector<CellRef> order;
  for (Color color : {Color::Red, Color::Blue})
    for (std::size_t idx = 0; idx < d->cells(color).size(); ++idx) order.push_back({color, static_cast<int>(idx)});
  auto grid = [&](CellRef r) { return d->cells(r.color)[static_cast<std::size_t>(r.index)].grid; };
  std::sort(order.begin(), order.end(), [&](CellRef a, CellRef b) {
    Cell ga = grid(a), gb = grid(b);
    if (ga.row != gb.row) return ga.row < gb.row;
    return ga.col > gb.col;
  });
  const std::size_t n = order.size();
  std::vector<std::optional<CellRef>> right(n), above(n);
  for (std::size_t p = 0; p < n; ++p) {
    Cell g = grid(order[p]);
    right[p] = d->at({g.row, g.col + 2});
    above[p] = d->at({g.row - 2, g.col});
  }
  ShuffleTableau T{d, std::vector<int>(d->red_cells().size(), 0), std::vector<int>(d->blue_cells().size(), 0)};
  std::vector<int> balance(static_cast<std::size_t>(N + 1), 0);
  BudgetMeter meter("Yamanouchi search");
  std::function<void(std::size_t)> rec = [&](std::size_t p) {
    meter.tick();
    if (p == n) {
      if (is_yamanouchi(T, N)) f(T);
      return;
    }
    int lo = above[p] ? T.value(*above[p]) + 1 : 1;
    int hi = right[p] ? T.value(*right[p]) : N;
    for (int v = lo; v <= hi; ++v) {
      if (v >= 2 && balance[static_cast<std::size_t>(v - 1)] == 0) continue;
      T.value(order[p]) = v;
      if (v >= 2) --balance[static_cast<std::size_t>(v - 1)];
      if (v <= N - 1) ++balance[static_cast<std::size_t>(v)];
      rec(p + 1);
      if (v >= 2) ++balance[static_cast<std::size_t>(v - 1)];
      if (v <= N - 1) --balance[static_cast<std::size_t>(v)];
    }
    T.value(order[p]) = 0;
  };
  rec(0);
}

// ----------------------------------------------------------- immanants

std::map<NoncrossingMatching, SymPoly> imm_by_shuffle_all(const RibbonDecomposition& dec, int N) {
  DiagramPtr d = build_diagram(dec);
  std::map<NoncrossingMatching, MonomialAccumulator> acc;
  for (const auto& m : all_matchings(dec.length())) acc.emplace(m, MonomialAccumulator(N));
  for_each_shuffle_tableau(d, N, [&](const ShuffleTableau& T) { acc.at(tl_type(T)).add(T.weight(N)); });
  std::map<NoncrossingMatching, SymPoly> out;
  for (auto& [m, a] : acc) out.emplace(m, a.to_sympoly());
  return out;
}

SymPoly imm_by_shuffle(const RibbonDecomposition& dec, int N, const NoncrossingMatching& tau) {
  if (tau.n() != dec.length()) throw InvalidInput("type size differs from the number of sections");
  return imm_by_shuffle_all(dec, N).at(tau);
}

std::map<NoncrossingMatching, SchurExpansion> schur_expand_by_crystal(const RibbonDecomposition& dec, int N) {
  DiagramPtr d = build_diagram(dec);
  std::map<NoncrossingMatching, SchurExpansion> out;
  for (const auto& m : all_matchings(dec.length())) out.emplace(m, SchurExpansion(N));
  for_each_yamanouchi(d, N, [&](const ShuffleTableau& T) {
    std::vector<int> w = T.weight(N);
    if (!std::is_sorted(w.begin(), w.end(), std::greater<>()))
      throw InternalError("Yamanouchi tableau with non-dominant weight");
    out.at(tl_type(T)).add_term(Partition(w), 1);
  });
  return out;
}

}  // namespace ril
