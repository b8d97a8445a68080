#pragma once

// Shuffle diagrams and tableaux, their Temperley-Lieb type, reading words
// and crystal operators.
//
// Grid coordinates: the cell of section k holding content c sits at
// (2*row(r_c) + k, 2*col(r_c) + k), so odd sections land on (odd, odd)
// positions and even sections on (even, even) positions.  Positions of
// mixed parity are holes, where strands and the P/Q nodes live.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "ribbonimm/ribbonmat.hpp"

namespace ril {

enum class Color : std::uint8_t { Red, Blue };

struct DiagramCell {
  int section = 0;  // 1-based index into the decomposition
  int content = 0;
  Cell grid;
};

struct DiagramNode {
  bool is_p = false;  // P_k (start) or Q_k (end)
  int k = 0;          // 1-based
  Cell grid;
};

struct CellRef {
  Color color;
  int index;
  auto operator<=>(const CellRef&) const = default;
};

/// Precomputed strand geometry: dense ids over the bounding box of the grid.
struct StrandPlan {
  struct Pair {
    int partner = -1;    // global cell index, or -1 for the boundary sentinel
    int sentinel = 0;    // used when partner < 0
    int vertical = 0;    // hole id used when the pair is weakly increasing
    int horizontal = 0;  // hole id used otherwise
  };
  int row0 = 0, col0 = 0, width = 0, height = 0;
  std::vector<int> cell_id;      // global cell index -> dense id
  std::vector<Pair> sw, ne;      // per global cell index
  std::vector<int> node_of;      // dense id -> node index or -1
  std::vector<char> is_cell;     // dense id -> cell?
  int id(Cell g) const { return (g.row - row0) * width + (g.col - col0); }
};

class ShuffleDiagram {
 public:
  explicit ShuffleDiagram(const RibbonDecomposition& dec);
  /// Bare diagram with red (i,j) at (2i-1,2j-1) and blue (i,j) at (2i,2j);
  /// it has no nodes, so only fillings and reading words are available.
  static ShuffleDiagram from_shapes(const SkewShape& red, const SkewShape& blue);

  bool has_ribbon() const { return dec_.has_value(); }
  /// Throws InvalidInput for a bare diagram.
  const RibbonDecomposition& decomposition() const;
  int length() const { return dec_ ? dec_->length() : 0; }
  const SkewShape& red_shape() const { return red_shape_; }
  const SkewShape& blue_shape() const { return blue_shape_; }
  /// Aligned with red_shape().cells() / blue_shape().cells().
  const std::vector<DiagramCell>& red_cells() const { return red_cells_; }
  const std::vector<DiagramCell>& blue_cells() const { return blue_cells_; }
  const std::vector<DiagramCell>& cells(Color c) const { return c == Color::Red ? red_cells_ : blue_cells_; }
  const std::vector<DiagramNode>& nodes() const { return nodes_; }

  std::optional<CellRef> at(Cell grid) const;
  /// Index into cells(color) of section k's cell with the given content.
  std::optional<CellRef> find(int section, int content) const;

  /// Red cells first, then blue.
  int global_index(CellRef r) const { return r.color == Color::Red ? r.index : static_cast<int>(red_cells_.size()) + r.index; }
  const StrandPlan& plan() const { return plan_; }

 private:
  ShuffleDiagram() = default;
  void index_cells();
  void build_plan();

  std::optional<RibbonDecomposition> dec_;
  SkewShape red_shape_;
  SkewShape blue_shape_;
  std::vector<DiagramCell> red_cells_;
  std::vector<DiagramCell> blue_cells_;
  std::vector<DiagramNode> nodes_;
  std::map<Cell, CellRef> by_grid_;
  std::map<std::pair<int, int>, CellRef> by_section_;
  StrandPlan plan_;
};

using DiagramPtr = std::shared_ptr<const ShuffleDiagram>;

DiagramPtr build_diagram(const RibbonDecomposition& dec);

struct ShuffleTableau {
  DiagramPtr diagram;
  std::vector<int> red;   // aligned with red_cells()
  std::vector<int> blue;  // aligned with blue_cells()

  int value(CellRef ref) const { return ref.color == Color::Red ? red[static_cast<std::size_t>(ref.index)] : blue[static_cast<std::size_t>(ref.index)]; }
  int& value(CellRef ref) { return ref.color == Color::Red ? red[static_cast<std::size_t>(ref.index)] : blue[static_cast<std::size_t>(ref.index)]; }
  std::vector<int> weight(int N) const;
  /// Rows weakly increasing and columns strictly increasing in the grid.
  bool valid() const;

  bool operator==(const ShuffleTableau& o) const { return red == o.red && blue == o.blue; }
  bool operator<(const ShuffleTableau& o) const { return std::tie(red, blue) < std::tie(o.red, o.blue); }
};

/// Calls f for every shuffle tableau with entries in 1..N.
void for_each_shuffle_tableau(const DiagramPtr& d, int N, const std::function<void(const ShuffleTableau&)>& f);
std::vector<ShuffleTableau> enumerate_shuffle_tableaux(const DiagramPtr& d, int N);

/// Temperley-Lieb type read from the strands of T.  Throws StrandTraceError
/// if the strands do not pair up the nodes.
NoncrossingMatching tl_type(const ShuffleTableau& T);

struct ReadingWord {
  int i = 0;
  std::vector<int> letters;
  std::vector<CellRef> cells;
};

ReadingWord reading_word(const ShuffleTableau& T, int i);

/// nullopt when no unmatched letter exists.  Throws ValidityError if the
/// flipped filling is not a shuffle tableau.
std::optional<ShuffleTableau> crystal_E(const ShuffleTableau& T, int i);
std::optional<ShuffleTableau> crystal_F(const ShuffleTableau& T, int i, int N);

bool is_yamanouchi(const ShuffleTableau& T, int N);

/// Calls f for every Yamanouchi shuffle tableau (pruned search).
void for_each_yamanouchi(const DiagramPtr& d, int N, const std::function<void(const ShuffleTableau&)>& f);

std::map<NoncrossingMatching, SymPoly> imm_by_shuffle_all(const RibbonDecomposition& dec, int N);
SymPoly imm_by_shuffle(const RibbonDecomposition& dec, int N, const NoncrossingMatching& tau);

/// Schur expansion of every immanant from Yamanouchi tableaux.
std::map<NoncrossingMatching, SchurExpansion> schur_expand_by_crystal(const RibbonDecomposition& dec, int N);

}  // namespace ril
