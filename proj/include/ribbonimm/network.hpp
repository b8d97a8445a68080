#pragma once

// The directed lattice network of a ribbon decomposition.
//
// Vertices are (content, height) with height 1..N+1; height N+1 stands in
// for infinity.  Horizontal and diagonal edges step from content c+1 to c
// and carry the weight x_h of their source height h; the entry of the
// tableau cell r_c is that h.  Vertical edges carry weight 1.

#include <functional>
#include <map>
#include <vector>

#include "ribbonimm/shuffle.hpp"

namespace ril {

enum class EdgeKind : std::uint8_t { Diagonal, Horizontal, Up, Down };

struct NetVertex {
  int content;
  int height;
};

struct NetEdge {
  int to;
  EdgeKind kind;
};

/// A path as its vertex sequence.
using NetPath = std::vector<int>;

class RibbonNetwork {
 public:
  RibbonNetwork(const RibbonDecomposition& dec, int N);

  const RibbonDecomposition& decomposition() const { return dec_; }
  int nvars() const { return nvars_; }
  int top() const { return nvars_ + 1; }
  int content_lo() const { return c_lo_; }
  int content_hi() const { return c_hi_; }
  int num_vertices() const { return (c_hi_ - c_lo_ + 1) * top(); }

  int vertex(int content, int height) const { return (content - c_lo_) * top() + (height - 1); }
  NetVertex coords(int v) const { return {v / top() + c_lo_, v % top() + 1}; }
  const std::vector<NetEdge>& out_edges(int v) const { return out_[static_cast<std::size_t>(v)]; }

  /// Endpoints for the 1-based section k.
  int source(int k) const { return sources_[static_cast<std::size_t>(k - 1)]; }
  int sink(int k) const { return sinks_[static_cast<std::size_t>(k - 1)]; }

  /// Entries for cells r_{b-1}, ..., r_a read off a path from content b to a.
  std::vector<int> path_entries(const NetPath& p) const;
  /// Exponent vector of the path weight.
  std::vector<int> path_weight(const NetPath& p) const;

  /// All paths between two vertices avoiding `blocked` vertices.
  void for_each_path(int from, int to, const std::vector<char>& blocked,
                     const std::function<void(const NetPath&)>& f) const;

 private:
  RibbonDecomposition dec_;
  int nvars_;
  int c_lo_;
  int c_hi_;
  std::vector<std::vector<NetEdge>> out_;
  std::vector<int> sources_;
  std::vector<int> sinks_;
};

RibbonNetwork build_network(const RibbonDecomposition& dec, int N);

/// Generating function of paths P_i -> Q_j (1-based).
SymPoly path_weight_sum(const RibbonNetwork& net, int i, int j);

/// Weight sum of vertex-disjoint families P_k -> Q_k over all k.
SymPoly lgv_sum(const RibbonNetwork& net);

struct ColoredCover {
  std::vector<NetPath> red;   // paths for sections 1, 3, 5, ...
  std::vector<NetPath> blue;  // paths for sections 2, 4, ...
};

/// Calls f for every vertex-disjoint family on the sections of one parity.
void for_each_family(const RibbonNetwork& net, Color color,
                     const std::function<void(const std::vector<NetPath>&)>& f);
void for_each_cover(const RibbonNetwork& net, const std::function<void(const ColoredCover&)>& f);
std::vector<ColoredCover> enumerate_covers(const RibbonNetwork& net);

std::vector<int> cover_weight(const RibbonNetwork& net, const ColoredCover& x);

/// The uncrossing map: contract doubly covered runs, split them into
/// in/out pairs and trace the resulting strands between P and Q nodes.
NoncrossingMatching uncross_type(const RibbonNetwork& net, const ColoredCover& x);

/// Phi: the shuffle tableau recorded by a cover, and its inverse.
ShuffleTableau tableau_from_cover(const RibbonNetwork& net, const DiagramPtr& d, const ColoredCover& x);
ColoredCover cover_from_tableau(const RibbonNetwork& net, const ShuffleTableau& T);

std::map<NoncrossingMatching, SymPoly> imm_by_covers_all(const RibbonDecomposition& dec, int N);
SymPoly imm_by_covers(const RibbonDecomposition& dec, int N, const NoncrossingMatching& tau);

}  // namespace ril
