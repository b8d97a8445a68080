#include "ribbonimm/shapes.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "ribbonimm/errors.hpp"

namespace ril {

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw InvalidInput("partition has a negative part");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw InvalidInput("partition parts must be weakly decreasing: " + str());
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner[i] > parts_[i]) return false;
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (parts_.empty()) return {};
  for (int j = 1; j <= parts_[0]; ++j) {
    int n = 0;
    while (n < length() && parts_[n] >= j) ++n;
    c.push_back(n);
  }
  return Partition(std::move(c));
}

std::string Partition::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

// ---------------------------------------------------------------- SkewShape

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_))
    throw InvalidInput("inner partition " + inner_.str() + " not contained in " + outer_.str());
}

std::vector<ContentCell> SkewShape::cells() const {
  std::vector<ContentCell> out;
  out.reserve(size());
  for (int i = 0; i < outer_.length(); ++i)
    for (int j = inner_[i] + 1; j <= outer_[i]; ++j) out.push_back({i + 1, j, j - i - 1});
  return out;
}

bool SkewShape::contains(Cell c) const {
  if (c.row < 1 || c.row > outer_.length()) return false;
  return c.col > inner_[c.row - 1] && c.col <= outer_[c.row - 1];
}

namespace {

// NW-SE convexity: (i,j),(i',j') in D with i<=i', j<=j' force the rectangle.
// Checked row-wise: rows are intervals with weakly decreasing endpoints, and
// two nonempty rows separated by empty rows do not overlap in columns.
struct RowSpan {
  int lo, hi;
};

}  // namespace

SkewShape SkewShape::from_cells(const std::vector<Cell>& cells) {
  if (cells.empty()) return {};
  std::set<Cell> uniq(cells.begin(), cells.end());
  if (uniq.size() != cells.size()) throw NotSkew("cells overlap");
  int min_row = uniq.begin()->row, max_row = min_row, min_col = uniq.begin()->col;
  for (const auto& c : uniq) {
    min_row = std::min(min_row, c.row);
    max_row = std::max(max_row, c.row);
    min_col = std::min(min_col, c.col);
  }
  int t = 1 - std::min(min_row, min_col);
  std::map<int, RowSpan> rows;
  std::map<int, int> counts;
  for (const auto& c : uniq) {
    int r = c.row + t, col = c.col + t;
    auto it = rows.find(r);
    if (it == rows.end()) {
      rows[r] = {col, col};
    } else {
      it->second.lo = std::min(it->second.lo, col);
      it->second.hi = std::max(it->second.hi, col);
    }
    ++counts[r];
  }
  for (const auto& [r, span] : rows)
    if (span.hi - span.lo + 1 != counts[r]) throw NotSkew("row " + std::to_string(r) + " is not contiguous");
  // Endpoint monotonicity and gap condition.
  const RowSpan* prev = nullptr;
  int prev_row = 0;
  for (const auto& [r, span] : rows) {
    if (prev) {
      if (span.lo > prev->lo || span.hi > prev->hi) throw NotSkew("row endpoints not weakly decreasing");
      if (r > prev_row + 1 && span.hi >= prev->lo) throw NotSkew("rows across a gap overlap in columns");
    }
    prev = &span;
    prev_row = r;
  }
  int last_row = rows.rbegin()->first;
  std::vector<int> outer(last_row, 0), inner(last_row, 0);
  // Rows above the first nonempty row and empty middle rows are filled with
  // lambda_i = mu_i equal to the lambda of the next nonempty row below.
  int below_hi = 0;
  for (int r = last_row; r >= 1; --r) {
    auto it = rows.find(r);
    if (it != rows.end()) {
      outer[r - 1] = it->second.hi;
      inner[r - 1] = it->second.lo - 1;
      below_hi = it->second.hi;
    } else {
      outer[r - 1] = below_hi;
      inner[r - 1] = below_hi;
    }
  }
  try {
    return SkewShape(Partition(outer), Partition(inner));
  } catch (const InvalidInput& e) {
    throw NotSkew(std::string("cells do not form a skew shape: ") + e.what());
  }
}

SkewShape SkewShape::normalized() const {
  auto cs = cells();
  if (cs.empty()) return {};
  int min_row = cs.front().row, min_col = cs.front().col;
  for (const auto& c : cs) {
    min_row = std::min(min_row, c.row);
    min_col = std::min(min_col, c.col);
  }
  // Shift so the minimum column becomes the minimum row, then from_cells
  // brings both to 1.
  std::vector<Cell> moved;
  for (const auto& c : cs) moved.push_back({c.row - min_row, c.col - min_col});
  return from_cells(moved);
}

bool SkewShape::is_connected() const {
  auto cs = cells();
  if (cs.empty()) return true;
  std::set<Cell> all;
  for (const auto& c : cs) all.insert({c.row, c.col});
  std::set<Cell> seen{*all.begin()};
  std::vector<Cell> stack{*all.begin()};
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    const Cell nbrs[4] = {{c.row + 1, c.col}, {c.row - 1, c.col}, {c.row, c.col + 1}, {c.row, c.col - 1}};
    for (const auto& n : nbrs)
      if (all.count(n) && seen.insert(n).second) stack.push_back(n);
  }
  return seen.size() == all.size();
}

bool SkewShape::is_ribbon() const {
  if (empty() || !is_connected()) return false;
  for (const auto& c : cells())
    if (contains({c.row + 1, c.col}) && contains({c.row, c.col + 1}) && contains({c.row + 1, c.col + 1}))
      return false;
  return true;
}

bool is_ribbon(const SkewShape& shape) { return shape.is_ribbon(); }

std::string SkewShape::str() const { return outer_.str() + "/" + inner_.str(); }

// ----------------------------------------------------------- InfiniteRibbon

char step_char(StepDir d) { return d == StepDir::Below ? 'B' : 'L'; }

StepDir step_from_char(char c) {
  if (c == 'B' || c == 'b') return StepDir::Below;
  if (c == 'L' || c == 'l') return StepDir::Left;
  throw InvalidInput(std::string("step must be 'B' or 'L', got '") + c + "'");
}

namespace {

Cell step_down(Cell from, StepDir d) {
  // r_{c-1} from r_c given step(c).
  return d == StepDir::Below ? Cell{from.row + 1, from.col} : Cell{from.row, from.col - 1};
}

Cell step_up(Cell from, StepDir d) {
  // r_c from r_{c-1} given step(c).
  return d == StepDir::Below ? Cell{from.row - 1, from.col} : Cell{from.row, from.col + 1};
}

}  // namespace

InfiniteRibbon::InfiniteRibbon(int window_lo, std::vector<StepDir> steps, StepDir tail_lo, StepDir tail_hi)
    : window_lo_(window_lo), steps_(std::move(steps)), tail_lo_(tail_lo), tail_hi_(tail_hi) {
  // Walk from r_0 to r_{window_lo}.
  Cell r{0, 0};
  if (window_lo_ >= 0) {
    for (int c = 1; c <= window_lo_; ++c) r = step_up(r, step(c));
  } else {
    for (int c = 0; c > window_lo_; --c) r = step_down(r, step(c));
  }
  window_boxes_.reserve(steps_.size() + 1);
  window_boxes_.push_back(r);
  for (int c = window_lo_ + 1; c <= window_hi(); ++c) {
    r = step_up(r, step(c));
    window_boxes_.push_back(r);
  }
}

StepDir InfiniteRibbon::step(int content) const {
  if (content <= window_lo_) return tail_lo_;
  if (content > window_hi()) return tail_hi_;
  return steps_[content - window_lo_ - 1];
}

Cell InfiniteRibbon::box(int content) const {
  if (content < window_lo_) {
    Cell base = window_boxes_.front();
    int k = window_lo_ - content;
    return tail_lo_ == StepDir::Below ? Cell{base.row + k, base.col} : Cell{base.row, base.col - k};
  }
  if (content > window_hi()) {
    Cell base = window_boxes_.back();
    int k = content - window_hi();
    return tail_hi_ == StepDir::Below ? Cell{base.row - k, base.col} : Cell{base.row, base.col + k};
  }
  return window_boxes_[content - window_lo_];
}

InfiniteRibbon InfiniteRibbon::canonical() const {
  std::size_t lo = 0, hi = steps_.size();
  while (lo < hi && steps_[lo] == tail_lo_) ++lo;
  while (hi > lo && steps_[hi - 1] == tail_hi_) --hi;
  std::vector<StepDir> trimmed(steps_.begin() + lo, steps_.begin() + hi);
  int new_lo = window_lo_ + static_cast<int>(lo);
  if (trimmed.empty()) new_lo = 0;
  return InfiniteRibbon(new_lo, std::move(trimmed), tail_lo_, tail_hi_);
}

std::string InfiniteRibbon::step_string(int lo, int hi) const {
  std::string s;
  for (int c = lo; c <= hi; ++c) s += step_char(step(c));
  return s;
}

bool InfiniteRibbon::operator==(const InfiniteRibbon& other) const {
  auto a = canonical(), b = other.canonical();
  return a.window_lo_ == b.window_lo_ && a.steps_ == b.steps_ && a.tail_lo_ == b.tail_lo_ &&
         a.tail_hi_ == b.tail_hi_;
}

SkewShape ribbon_section_shape(const InfiniteRibbon& ribbon, int a, int b) {
  if (a >= b) throw InvalidInput("empty ribbon section [" + std::to_string(a) + "," + std::to_string(b) + ")");
  std::vector<Cell> cells;
  for (int c = a; c < b; ++c) cells.push_back(ribbon.box(c));
  return SkewShape::from_cells(cells).normalized();
}

// ------------------------------------------------------ RibbonDecomposition

RibbonDecomposition::RibbonDecomposition(SkewShape shape, InfiniteRibbon ribbon, std::vector<Section> sections)
    : shape_(std::move(shape)), ribbon_(std::move(ribbon)), sections_(std::move(sections)) {}

std::vector<int> RibbonDecomposition::a_tuple() const {
  std::vector<int> v;
  for (const auto& s : sections_) v.push_back(s.a);
  return v;
}

std::vector<int> RibbonDecomposition::b_tuple() const {
  std::vector<int> v;
  for (const auto& s : sections_) v.push_back(s.b);
  return v;
}

RibbonDecomposition decompose(const SkewShape& shape, const InfiniteRibbon& ribbon) {
  if (shape.empty()) throw InvalidInput("cannot decompose an empty shape");
  std::map<int, std::vector<int>> by_copy;
  for (const auto& c : shape.cells()) by_copy[ribbon.copy_of({c.row, c.col})].push_back(c.content);
  std::vector<Section> sections;
  for (auto& [m, contents] : by_copy) {
    std::sort(contents.begin(), contents.end());
    for (std::size_t i = 1; i < contents.size(); ++i)
      if (contents[i] != contents[i - 1] + 1)
        throw IncompatibleShape("copy " + std::to_string(m) + " meets " + shape.str() + " non-contiguously");
    sections.push_back({m, contents.front(), contents.back() + 1});
  }
  for (std::size_t k = 1; k < sections.size(); ++k)
    if (sections[k].copy != sections[k - 1].copy + 1)
      throw NonConsecutiveCopies("shape " + shape.str() + " skips copy " + std::to_string(sections[k - 1].copy + 1));
  return RibbonDecomposition(shape, ribbon, std::move(sections));
}

PlacedSections place_sections(const InfiniteRibbon& ribbon, const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size() || a.empty()) throw InvalidInput("tuples must have equal positive length");
  PlacedSections out;
  std::vector<Cell> all;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] >= b[k]) throw InvalidInput("section " + std::to_string(k + 1) + " is empty");
    int m = static_cast<int>(k);
    out.cells.emplace_back();
    for (int c = a[k]; c < b[k]; ++c) {
      Cell r = ribbon.box(c);
      out.cells.back().push_back({r.row + m, r.col + m});
      all.push_back(out.cells.back().back());
    }
  }
  int lo = std::min(all.front().row, all.front().col);
  for (const auto& c : all) lo = std::min({lo, c.row, c.col});
  int t = 1 - lo;
  for (auto& sec : out.cells)
    for (auto& c : sec) c = {c.row + t, c.col + t};
  for (auto& c : all) c = {c.row + t, c.col + t};
  out.shape = SkewShape::from_cells(all);
  return out;
}

SkewShape shape_from_tuples(const InfiniteRibbon& ribbon, const std::vector<int>& a, const std::vector<int>& b) {
  return place_sections(ribbon, a, b).shape;
}

}  // namespace ril
