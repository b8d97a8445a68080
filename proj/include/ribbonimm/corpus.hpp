#pragma once

// Small-shape corpus and the sweep harnesses run over it.

#include <functional>
#include <string>
#include <vector>

#include "ribbonimm/ribbonmat.hpp"

namespace ril {

struct CorpusOptions {
  int max_cells = 8;
  /// Longest ribbon window: relevant steps are c1^p X c2^q with |X| <= max_window.
  int max_window = 5;
};

/// Connected skew shapes with 1..max_cells cells, normalized, in a fixed order.
std::vector<SkewShape> connected_shapes(int max_cells);

/// Every compatible (shape, ribbon) pair, deduplicated by the normalized
/// tuples together with the steps they depend on.  Deterministic order.
std::vector<RibbonDecomposition> generate_corpus(const CorpusOptions& opts);

enum class SweepKind { Det, Theorem11, Conjecture12, Cor35 };

SweepKind parse_sweep_kind(const std::string& name);
std::string sweep_kind_name(SweepKind k);

struct SweepOptions {
  CorpusOptions corpus;
  SweepKind kind = SweepKind::Det;
  int jobs = 1;
  /// 0 picks the number of cells (every Schur function of the degree is faithful).
  int nvars = 0;
  /// Immanant sweeps skip instances with more sections (at most 6, or 5
  /// for Kazhdan-Lusztig immanants); the determinant sweep covers all.
  int max_length = 6;
};

struct SweepItem {
  std::string shape;
  std::string ribbon;
  std::vector<int> a;
  std::vector<int> b;
  int nvars = 0;
  bool pass = true;
  bool skipped = false;
  std::string detail;
};

struct SweepReport {
  SweepKind kind = SweepKind::Det;
  std::vector<SweepItem> items;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  bool pass() const { return failed == 0; }
};

/// Runs one check on every corpus instance; results are in corpus order
/// regardless of the number of workers.
SweepReport run_sweep(const SweepOptions& opts);

/// Runs f(index) for index in [0, count) on `jobs` worker threads.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& f);

}  // namespace ril
