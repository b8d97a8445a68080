#pragma once

// JSON encodings shared by the command line tool and the Python module.

#include <string>

#include "json.hpp"
#include "ribbonimm/klbase.hpp"
#include "ribbonimm/ribbonmat.hpp"
#include "ribbonimm/shuffle.hpp"

namespace ril::json {

using nlohmann::json;

json to_json(const Partition& p);
json to_json(const SkewShape& s);
json to_json(const InfiniteRibbon& r);
json to_json(const RibbonDecomposition& d);
json to_json(const SymPoly& p);
json to_json(const SchurExpansion& e);
json to_json(const ShuffleTableau& T);
/// Timing fields are left out unless asked for, so reports are reproducible.
json to_json(const PositivityReport& r, bool timing = false);
json to_json(const KLReport& r);
json to_json(const KLCertificate& c);

/// Matrix entries as Schur expansions, row-major.
json matrix_to_json(const SFMatrix& M);

Partition partition_from_json(const json& j);
/// Accepts {"outer":..,"inner":..} or the shorthand "outer/inner" string.
SkewShape shape_from_json(const json& j);
/// Accepts the object form, the names "row", "column", "hook", or the
/// compact text "WINDOW_LO:STEPS:TAILS" such as "-4:BBLLLBBLBLLL:BL".
InfiniteRibbon ribbon_from_json(const json& j);

InfiniteRibbon parse_ribbon(const std::string& text);
/// Parses "[4,3]/[1]", "4,3/1" or "(4,3)/(1)".
SkewShape parse_shape(const std::string& text);
/// Parses a JSON document or file path.
json load(const std::string& text_or_path);

}  // namespace ril::json
