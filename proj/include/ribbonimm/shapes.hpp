#pragma once

// Partitions, skew shapes, infinite ribbons and ribbon decompositions.
//
// Coordinates: a cell (row, col) has row increasing downward and col
// increasing rightward; its content is col - row.  An infinite ribbon is
// stored as the step relation between consecutive boxes r_{c-1} and r_c,
// with r_0 anchored at (0,0).  Copies of a ribbon are its translates by
// (m, m); every cell of the plane lies in exactly one copy.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ril {

class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are trimmed; throws InvalidInput unless weakly decreasing
  /// and nonnegative.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts into weakly decreasing order first (zeros dropped).
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  /// Part i (0-based); zero beyond the length.
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }

  bool contains(const Partition& inner) const;
  Partition conjugate() const;

  /// "[3,1]"; the empty partition is "[]".
  std::string str() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

struct Cell {
  int row = 0;
  int col = 0;
  int content() const { return col - row; }
  auto operator<=>(const Cell&) const = default;
};

struct ContentCell {
  int row = 0;
  int col = 0;
  int content = 0;
  auto operator<=>(const ContentCell&) const = default;
};

class SkewShape {
 public:
  SkewShape() = default;
  /// Throws InvalidInput unless inner is contained in outer.
  SkewShape(Partition outer, Partition inner = {});

  /// Builds the skew shape whose cells are exactly `cells`, translated by a
  /// diagonal (t, t) so that contents are preserved and all coordinates are
  /// at least 1.  Throws NotSkew if the cell set is not a skew diagram.
  static SkewShape from_cells(const std::vector<Cell>& cells);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int size() const { return outer_.size() - inner_.size(); }
  bool empty() const { return size() == 0; }

  /// Row-major list of cells.
  std::vector<ContentCell> cells() const;
  bool contains(Cell c) const;

  /// Same cells translated so the minimum row and column are both 1.
  SkewShape normalized() const;

  bool is_ribbon() const;
  bool is_connected() const;

  std::string str() const;

  auto operator<=>(const SkewShape&) const = default;

 private:
  Partition outer_;
  Partition inner_;
};

/// Connectivity / 2x2 test on the cells of a skew shape.
bool is_ribbon(const SkewShape& shape);

enum class StepDir : std::uint8_t {
  Below,  // r_{c-1} is directly below r_c
  Left,   // r_{c-1} is directly left of r_c
};

char step_char(StepDir d);
StepDir step_from_char(char c);

class InfiniteRibbon {
 public:
  /// Steps for contents window_lo+1 .. window_lo+steps.size(); tail_lo covers
  /// contents <= window_lo and tail_hi covers contents > window_hi.
  InfiniteRibbon(int window_lo, std::vector<StepDir> steps, StepDir tail_lo, StepDir tail_hi);

  static InfiniteRibbon row() { return {0, {}, StepDir::Left, StepDir::Left}; }
  static InfiniteRibbon column() { return {0, {}, StepDir::Below, StepDir::Below}; }
  /// Column below r_0, row to the right of r_0.
  static InfiniteRibbon hook() { return {0, {}, StepDir::Below, StepDir::Left}; }

  int window_lo() const { return window_lo_; }
  int window_hi() const { return window_lo_ + static_cast<int>(steps_.size()); }
  const std::vector<StepDir>& steps() const { return steps_; }
  StepDir tail_lo() const { return tail_lo_; }
  StepDir tail_hi() const { return tail_hi_; }

  /// Relation of r_{content-1} to r_content.
  StepDir step(int content) const;
  /// Position of r_content (r_0 = (0,0)).
  Cell box(int content) const;
  /// Copy index m of a cell: cell - (m, m) lies on the ribbon.
  int copy_of(Cell c) const { return c.row - box(c.content()).row; }

  /// Window trimmed of steps equal to the adjacent tail.
  InfiniteRibbon canonical() const;

  /// Steps for contents lo..hi inclusive, as a string of 'B'/'L'.
  std::string step_string(int lo, int hi) const;

  bool operator==(const InfiniteRibbon& other) const;

 private:
  int window_lo_;
  std::vector<StepDir> steps_;
  StepDir tail_lo_;
  StepDir tail_hi_;
  // box(c) for c in [window_lo_, window_hi()].
  std::vector<Cell> window_boxes_;
};

/// Cells r_a .. r_{b-1} translated to minimum row and column 1.
/// Throws InvalidInput when a >= b.
SkewShape ribbon_section_shape(const InfiniteRibbon& ribbon, int a, int b);

struct Section {
  int copy = 0;
  int a = 0;  // first content (inclusive)
  int b = 0;  // last content (exclusive)
  int size() const { return b - a; }
  auto operator<=>(const Section&) const = default;
};

class RibbonDecomposition {
 public:
  RibbonDecomposition(SkewShape shape, InfiniteRibbon ribbon, std::vector<Section> sections);

  const SkewShape& shape() const { return shape_; }
  const InfiniteRibbon& ribbon() const { return ribbon_; }
  const std::vector<Section>& sections() const { return sections_; }
  int length() const { return static_cast<int>(sections_.size()); }

  std::vector<int> a_tuple() const;
  std::vector<int> b_tuple() const;

 private:
  SkewShape shape_;
  InfiniteRibbon ribbon_;
  std::vector<Section> sections_;
};

/// Splits a nonempty skew shape along the copies of `ribbon`, inside out.
/// Throws IncompatibleShape or NonConsecutiveCopies.
RibbonDecomposition decompose(const SkewShape& shape, const InfiniteRibbon& ribbon);

struct PlacedSections {
  SkewShape shape;
  /// cells[k][c - a_k] is the cell of content c from section k, in the
  /// coordinates of `shape`.
  std::vector<std::vector<Cell>> cells;
};

/// Places section [a_k, b_k) in copy k-1 and returns the union as a skew
/// shape with contents preserved.  Throws NotSkew / InvalidInput.
PlacedSections place_sections(const InfiniteRibbon& ribbon, const std::vector<int>& a, const std::vector<int>& b);
SkewShape shape_from_tuples(const InfiniteRibbon& ribbon, const std::vector<int>& a,
                            const std::vector<int>& b);

}  // namespace ril
