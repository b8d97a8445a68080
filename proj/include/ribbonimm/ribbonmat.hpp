#pragma once

// Ribbon decomposition matrices, their minors, and positivity harnesses.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ribbonimm/shapes.hpp"
#include "ribbonimm/symfunc.hpp"
#include "ribbonimm/tlalgebra.hpp"

namespace ril {

struct RibbonMatrix {
  RibbonDecomposition decomposition;
  int nvars;
  SFMatrix matrix;
};

/// Shape of entry (i, j) (0-based): the ribbon section [a_j, b_i), or
/// nullopt when a_j >= b_i.
std::optional<SkewShape> entry_shape(const RibbonDecomposition& dec, int i, int j);

RibbonMatrix build(const RibbonDecomposition& dec, int N);

/// det(A) == s_{shape} in N variables.
bool check_determinant(const RibbonMatrix& rm);

/// Principal minor on 1-based indices I, rebuilt from the restricted tuples.
/// Throws InternalError if it differs from the submatrix of rm.
RibbonMatrix principal_minor(const RibbonMatrix& rm, const std::vector<int>& I);

/// Shapes built from the odd- and even-indexed sections.  The even shape is
/// empty when there is a single section.
std::pair<SkewShape, SkewShape> odd_even_split(const RibbonDecomposition& dec);

/// 1-based odd indices in [l] and their complement.
std::vector<int> odd_indices(int l);
std::vector<int> even_indices(int l);

enum class ImmRoute { Definition, Shuffle, Covers, Crystal };

ImmRoute parse_route(const std::string& name);
std::string route_name(ImmRoute r);

/// Every Temperley-Lieb immanant of the ribbon matrix, keyed by type.
std::map<NoncrossingMatching, SymPoly> immanants(const RibbonDecomposition& dec, int N, ImmRoute route);

struct TypeReport {
  NoncrossingMatching type;
  SchurExpansion expansion;
  bool positive = true;
  double seconds = 0.0;
};

struct PositivityReport {
  int nvars = 0;
  std::string route;
  std::vector<TypeReport> types;
  bool pass = true;
};

/// Schur-expands every Temperley-Lieb immanant and checks positivity.
PositivityReport theorem1_harness(const RibbonDecomposition& dec, int N, ImmRoute route = ImmRoute::Definition);

struct FixtureEntry {
  int row = 0;  // 1-based
  int col = 0;
  std::optional<SkewShape> shape;
  int constant = 0;  // used when shape is empty
};

/// Entries of a named fixture matrix: "remark_1_3", "remark_2_7" or
/// "example_2_3".
std::vector<FixtureEntry> fixture_entries(const std::string& name);
SFMatrix fixture_matrix(const std::string& name, int N);
/// Raw fixture JSON text.
const std::string& fixture_text();

struct RemarkMatrices {
  SFMatrix remark_1_3;
  SFMatrix remark_2_7;
};

/// Both displayed counterexample matrices in N variables.
RemarkMatrices remark_matrices(int N);

}  // namespace ril
