#include "ribbonimm/network.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "ribbonimm/budget.hpp"
#include "ribbonimm/errors.hpp"

namespace ril {

RibbonNetwork::RibbonNetwork(const RibbonDecomposition& dec, int N) : dec_(dec), nvars_(N) {
  if (N < 1) throw InvalidInput("the number of variables must be positive");
  const auto& R = dec_.ribbon();
  auto a = dec_.a_tuple();
  auto b = dec_.b_tuple();
  c_lo_ = *std::min_element(a.begin(), a.end()) - 1;
  c_hi_ = *std::max_element(b.begin(), b.end()) + 1;
  out_.assign(static_cast<std::size_t>(num_vertices()), {});
  for (int c = c_lo_; c <= c_hi_; ++c) {
    StepDir s = R.step(c);
    for (int h = 1; h <= top(); ++h) {
      auto& out = out_[static_cast<std::size_t>(vertex(c, h))];
      if (s == StepDir::Below && h < top()) out.push_back({vertex(c, h + 1), EdgeKind::Up});
      if (s == StepDir::Left && h > 1) out.push_back({vertex(c, h - 1), EdgeKind::Down});
      if (c > c_lo_ && h <= N) {
        if (R.step(c - 1) == StepDir::Below) out.push_back({vertex(c - 1, h + 1), EdgeKind::Diagonal});
        else out.push_back({vertex(c - 1, h), EdgeKind::Horizontal});
      }
    }
  }
  for (int k = 0; k < dec_.length(); ++k) {
    int bk = b[static_cast<std::size_t>(k)];
    int ak = a[static_cast<std::size_t>(k)];
    sources_.push_back(vertex(bk, R.step(bk) == StepDir::Below ? 1 : top()));
    sinks_.push_back(vertex(ak, R.step(ak) == StepDir::Left ? 1 : top()));
  }
}

std::vector<int> RibbonNetwork::path_entries(const NetPath& p) const {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    NetVertex u = coords(p[i]), v = coords(p[i + 1]);
    if (v.content != u.content) out.push_back(u.height);
  }
  return out;
}

std::vector<int> RibbonNetwork::path_weight(const NetPath& p) const {
  std::vector<int> w(static_cast<std::size_t>(nvars_), 0);
  for (int h : path_entries(p)) ++w[static_cast<std::size_t>(h - 1)];
  return w;
}

void RibbonNetwork::for_each_path(int from, int to, const std::vector<char>& blocked,
                                  const std::function<void(const NetPath&)>& f) const {
  if (blocked[static_cast<std::size_t>(from)] || blocked[static_cast<std::size_t>(to)]) return;
  const int target_content = coords(to).content;
  NetPath path{from};
  BudgetMeter meter("network path search");
  std::function<void(int)> rec = [&](int u) {
    meter.tick();
    if (u == to) {
      f(path);
      return;
    }
    for (const auto& e : out_edges(u)) {
      if (blocked[static_cast<std::size_t>(e.to)]) continue;
      if (coords(e.to).content < target_content) continue;
      path.push_back(e.to);
      rec(e.to);
      path.pop_back();
    }
  };
  rec(from);
}

RibbonNetwork build_network(const RibbonDecomposition& dec, int N) { return RibbonNetwork(dec, N); }

SymPoly path_weight_sum(const RibbonNetwork& net, int i, int j) {
  MonomialAccumulator acc(net.nvars());
  std::vector<char> blocked(static_cast<std::size_t>(net.num_vertices()), 0);
  net.for_each_path(net.source(i), net.sink(j), blocked, [&](const NetPath& p) { acc.add(net.path_weight(p)); });
  return acc.to_sympoly();
}

namespace {

// Vertex-disjoint families routing source(k) -> sink(k) for every k in ks.
void for_each_disjoint(const RibbonNetwork& net, const std::vector<int>& ks,
                       const std::function<void(const std::vector<NetPath>&)>& f) {
  std::vector<char> blocked(static_cast<std::size_t>(net.num_vertices()), 0);
  // Endpoints of later paths must stay free for them.
  for (int k : ks) {
    blocked[static_cast<std::size_t>(net.source(k))] = 1;
    blocked[static_cast<std::size_t>(net.sink(k))] = 1;
  }
  std::vector<NetPath> family;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == ks.size()) {
      f(family);
      return;
    }
    int s = net.source(ks[idx]), t = net.sink(ks[idx]);
    blocked[static_cast<std::size_t>(s)] = 0;
    blocked[static_cast<std::size_t>(t)] = 0;
    net.for_each_path(s, t, blocked, [&](const NetPath& p) {
      for (int v : p) blocked[static_cast<std::size_t>(v)] = 1;
      family.push_back(p);
      rec(idx + 1);
      family.pop_back();
      for (int v : p) blocked[static_cast<std::size_t>(v)] = 0;
    });
    blocked[static_cast<std::size_t>(s)] = 1;
    blocked[static_cast<std::size_t>(t)] = 1;
  };
  rec(0);
}

std::vector<int> all_indices(int l) {
  std::vector<int> v(static_cast<std::size_t>(l));
  std::iota(v.begin(), v.end(), 1);
  return v;
}

}  // namespace

SymPoly lgv_sum(const RibbonNetwork& net) {
  MonomialAccumulator acc(net.nvars());
  for_each_disjoint(net, all_indices(net.decomposition().length()), [&](const std::vector<NetPath>& fam) {
    std::vector<int> w(static_cast<std::size_t>(net.nvars()), 0);
    for (const auto& p : fam) {
      auto pw = net.path_weight(p);
      for (std::size_t i = 0; i < w.size(); ++i) w[i] += pw[i];
    }
    acc.add(w);
  });
  return acc.to_sympoly();
}

void for_each_family(const RibbonNetwork& net, Color color,
                     const std::function<void(const std::vector<NetPath>&)>& f) {
  const int l = net.decomposition().length();
  for_each_disjoint(net, color == Color::Red ? odd_indices(l) : even_indices(l), f);
}

void for_each_cover(const RibbonNetwork& net, const std::function<void(const ColoredCover&)>& f) {
  std::vector<std::vector<NetPath>> reds, blues;
  for_each_family(net, Color::Red, [&](const std::vector<NetPath>& fam) { reds.push_back(fam); });
  for_each_family(net, Color::Blue, [&](const std::vector<NetPath>& fam) { blues.push_back(fam); });
  BudgetMeter meter("cover enumeration");
  meter.tick(static_cast<std::uint64_t>(reds.size()) * blues.size());
  ColoredCover x;
  for (const auto& r : reds) {
    x.red = r;
    for (const auto& b : blues) {
      x.blue = b;
      f(x);
    }
  }
}

std::vector<ColoredCover> enumerate_covers(const RibbonNetwork& net) {
  std::vector<ColoredCover> out;
  for_each_cover(net, [&](const ColoredCover& x) { out.push_back(x); });
  return out;
}

std::vector<int> cover_weight(const RibbonNetwork& net, const ColoredCover& x) {
  std::vector<int> w(static_cast<std::size_t>(net.nvars()), 0);
  for (const auto* fam : {&x.red, &x.blue})
    for (const auto& p : *fam) {
      auto pw = net.path_weight(p);
      for (std::size_t i = 0; i < w.size(); ++i) w[i] += pw[i];
    }
  return w;
}

NoncrossingMatching uncross_type(const RibbonNetwork& net, const ColoredCover& x) {
  const int l = net.decomposition().length();
  const std::size_t nv = static_cast<std::size_t>(net.num_vertices());
  // Paths indexed by section k-1.
  std::vector<const NetPath*> paths(static_cast<std::size_t>(l), nullptr);
  {
    auto odd = odd_indices(l), even = even_indices(l);
    if (x.red.size() != odd.size() || x.blue.size() != even.size())
      throw InvalidInput("cover does not match the number of sections");
    for (std::size_t i = 0; i < odd.size(); ++i) paths[static_cast<std::size_t>(odd[i] - 1)] = &x.red[i];
    for (std::size_t i = 0; i < even.size(); ++i) paths[static_cast<std::size_t>(even[i] - 1)] = &x.blue[i];
  }
  // pos[color][v] = (section index, position) of the path of that color through v.
  std::vector<std::array<std::pair<int, int>, 2>> pos(nv, {std::pair{-1, -1}, std::pair{-1, -1}});
  for (int k = 0; k < l; ++k) {
    const auto& p = *paths[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < p.size(); ++i) {
      auto& slot = pos[static_cast<std::size_t>(p[i])][static_cast<std::size_t>(k % 2)];
      if (slot.first != -1) throw InvalidInput("paths of one color share a vertex");
      slot = {k, static_cast<int>(i)};
    }
  }
  auto shared = [&](int v) {
    return pos[static_cast<std::size_t>(v)][0].first != -1 && pos[static_cast<std::size_t>(v)][1].first != -1;
  };
  // Blocks: runs of shared vertices joined by an edge used by both paths.
  std::vector<int> block_of(nv, -1);
  int nblocks = 0;
  for (int k = 0; k < l; k += 2) {
    const auto& p = *paths[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < p.size(); ++i) {
      int v = p[i];
      if (!shared(v)) continue;
      bool joins = false;
      if (i > 0 && shared(p[i - 1])) {
        auto [bk, bi] = pos[static_cast<std::size_t>(v)][1];
        auto [pk, pi] = pos[static_cast<std::size_t>(p[i - 1])][1];
        joins = bk == pk && pi + 1 == bi;
      }
      block_of[static_cast<std::size_t>(v)] = joins ? block_of[static_cast<std::size_t>(p[i - 1])] : nblocks++;
    }
  }
  // For every path, its block visits in order as (block, first pos, last pos).
  struct Visit {
    int block;
    int first;
    int last;
  };
  std::vector<std::vector<Visit>> visits(static_cast<std::size_t>(l));
  // block -> visit index within the red / blue path through it.
  std::vector<std::array<std::pair<int, int>, 2>> block_ports(static_cast<std::size_t>(nblocks));
  for (int k = 0; k < l; ++k) {
    const auto& p = *paths[static_cast<std::size_t>(k)];
    auto& vs = visits[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < p.size(); ++i) {
      int blk = block_of[static_cast<std::size_t>(p[i])];
      if (blk < 0) continue;
      if (!vs.empty() && vs.back().block == blk && vs.back().last + 1 == static_cast<int>(i)) {
        vs.back().last = static_cast<int>(i);
      } else {
        vs.push_back({blk, static_cast<int>(i), static_cast<int>(i)});
        block_ports[static_cast<std::size_t>(blk)][static_cast<std::size_t>(k % 2)] = {k, static_cast<int>(vs.size()) - 1};
      }
    }
  }
  // Walk strands.  State: on path k heading forward from the out port of
  // visit j (j = -1 means from P_k), or backward from the in port of visit j
  // (j = size means from Q_k).
  std::vector<int> partner(static_cast<std::size_t>(2 * l), -1);
  auto trace = [&](int k, bool forward) {
    int j = forward ? -1 : static_cast<int>(visits[static_cast<std::size_t>(k)].size());
    std::size_t guard = 0;
    while (true) {
      if (++guard > 4 * nv + 16) throw InternalError("uncrossing walk does not terminate");
      const auto& vs = visits[static_cast<std::size_t>(k)];
      int next = forward ? j + 1 : j - 1;
      if (next >= static_cast<int>(vs.size())) return l + k;  // Q_{k+1}
      if (next < 0) return k;                                  // P_{k+1}
      int blk = vs[static_cast<std::size_t>(next)].block;
      auto other = block_ports[static_cast<std::size_t>(blk)][static_cast<std::size_t>(1 - k % 2)];
      // Arriving forward enters through the in port; in pairs with in and
      // out with out, so the walk continues backward or forward respectively.
      k = other.first;
      j = other.second;
      forward = !forward;
    }
  };
  for (int k = 0; k < l; ++k) {
    for (bool forward : {true, false}) {
      int start = forward ? k : l + k;
      if (partner[static_cast<std::size_t>(start)] != -1) continue;
      int end = trace(k, forward);
      if (end == start) throw InternalError("uncrossing strand returns to its start");
      partner[static_cast<std::size_t>(start)] = end;
      partner[static_cast<std::size_t>(end)] = start;
    }
  }
  try {
    return NoncrossingMatching(std::move(partner));
  } catch (const InvalidInput& e) {
    throw InternalError(std::string("uncrossed strands cross: ") + e.what());
  }
}

ShuffleTableau tableau_from_cover(const RibbonNetwork& net, const DiagramPtr& d, const ColoredCover& x) {
  ShuffleTableau T{d, std::vector<int>(d->red_cells().size(), 0), std::vector<int>(d->blue_cells().size(), 0)};
  const int l = net.decomposition().length();
  auto odd = odd_indices(l), even = even_indices(l);
  auto fill = [&](const std::vector<int>& ks, const std::vector<NetPath>& fam) {
    for (std::size_t i = 0; i < ks.size(); ++i) {
      const Section& s = net.decomposition().sections()[static_cast<std::size_t>(ks[i] - 1)];
      auto entries = net.path_entries(fam[i]);
      if (static_cast<int>(entries.size()) != s.size()) throw InternalError("path length differs from its section");
      for (int t = 0; t < s.size(); ++t) {
        auto ref = d->find(ks[i], s.b - 1 - t);
        if (!ref) throw InternalError("section cell missing from the shuffle diagram");
        T.value(*ref) = entries[static_cast<std::size_t>(t)];
      }
    }
  };
  fill(odd, x.red);
  fill(even, x.blue);
  return T;
}

ColoredCover cover_from_tableau(const RibbonNetwork& net, const ShuffleTableau& T) {
  const auto& R = net.decomposition().ribbon();
  const int l = net.decomposition().length();
  auto vertical = [&](NetPath& p, int c, int h_from, int h_to) {
    bool up = R.step(c) == StepDir::Below;
    if (up ? h_to < h_from : h_to > h_from) throw InvalidInput("filling is not realised by a network path");
    for (int h = h_from; h != h_to; h += up ? 1 : -1) p.push_back(net.vertex(c, up ? h + 1 : h - 1));
  };
  ColoredCover x;
  for (int k = 1; k <= l; ++k) {
    const Section& s = net.decomposition().sections()[static_cast<std::size_t>(k - 1)];
    NetPath p{net.source(k)};
    int h = net.coords(net.source(k)).height;
    for (int c = s.b - 1; c >= s.a; --c) {
      auto ref = T.diagram->find(k, c);
      if (!ref) throw InvalidInput("tableau does not cover section " + std::to_string(k));
      int e = T.value(*ref);
      if (e < 1 || e > net.nvars()) throw InvalidInput("entry out of range");
      vertical(p, c + 1, h, e);
      h = R.step(c) == StepDir::Below ? e + 1 : e;
      p.push_back(net.vertex(c, h));
    }
    vertical(p, s.a, h, net.coords(net.sink(k)).height);
    (k % 2 ? x.red : x.blue).push_back(std::move(p));
  }
  return x;
}

std::map<NoncrossingMatching, SymPoly> imm_by_covers_all(const RibbonDecomposition& dec, int N) {
  RibbonNetwork net(dec, N);
  std::map<NoncrossingMatching, MonomialAccumulator> acc;
  for (const auto& m : all_matchings(dec.length())) acc.emplace(m, MonomialAccumulator(N));
  for_each_cover(net, [&](const ColoredCover& x) { acc.at(uncross_type(net, x)).add(cover_weight(net, x)); });
  std::map<NoncrossingMatching, SymPoly> out;
  for (auto& [m, a] : acc) out.emplace(m, a.to_sympoly());
  return out;
}

SymPoly imm_by_covers(const RibbonDecomposition& dec, int N, const NoncrossingMatching& tau) {
  if (tau.n() != dec.length()) throw InvalidInput("type size differs from the number of sections");
  return imm_by_covers_all(dec, N).at(tau);
}

}  // namespace ril
