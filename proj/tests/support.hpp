#pragma once

#include <random>
#include <string>
#include <vector>

#include "ribbonimm/shapes.hpp"
#include "ribbonimm/symfunc.hpp"

namespace ril::testing {

inline InfiniteRibbon example_ribbon() {
  std::vector<StepDir> steps;
  for (char c : std::string("BBLLLBBLBLLL")) steps.push_back(step_from_char(c));
  return InfiniteRibbon(-4, steps, StepDir::Below, StepDir::Left);
}

inline SkewShape example_shape() { return SkewShape({9, 7, 7, 5, 2}, {2, 1}); }

inline RibbonDecomposition example_decomposition() { return decompose(example_shape(), example_ribbon()); }

inline std::vector<int> zero_based(std::vector<int> v) {
  for (int& x : v) --x;
  return v;
}

/// Entry drawn from small skew Schur functions, h_k, e_k, integers and sums
/// of these; no ribbon structure.
inline SymPoly random_entry(std::mt19937& rng, int N) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  switch (pick(0, 5)) {
    case 0: return SymPoly::constant(N, pick(-2, 2));
    case 1: return complete_h(pick(0, 3), N);
    case 2: return elementary_e(pick(1, 3), N);
    case 3: {
      std::vector<int> outer{pick(1, 3), pick(0, 2)};
      if (outer[1] > outer[0]) std::swap(outer[0], outer[1]);
      std::vector<int> inner{pick(0, outer[1]), 0};
      return skew_schur(SkewShape(Partition(outer), Partition(inner)), N);
    }
    case 4: return complete_h(pick(1, 2), N) * Integer(pick(-2, 2)) + SymPoly::one(N);
    default: return complete_h(1, N) * complete_h(1, N) - elementary_e(2, N);
  }
}

inline SFMatrix random_matrix(std::mt19937& rng, int n, int N) {
  SFMatrix A(n, N);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A.set(i, j, random_entry(rng, N));
  return A;
}

}  // namespace ril::testing
