#include "ribbonimm/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ribbonimm/errors.hpp"

namespace ril::json {

namespace {

std::string integer_str(const Integer& c) { return c.str(); }

StepDir dir_from_json(const json& j) {
  std::string s = j.get<std::string>();
  if (s.size() != 1) throw InvalidInput("step must be \"L\" or \"B\"");
  return step_from_char(s[0]);
}

std::vector<int> parse_int_list(std::string s) {
  for (char& c : s)
    if (c == '[' || c == ']' || c == '(' || c == ')') c = ' ';
  for (char& c : s)
    if (c == ',') c = ' ';
  std::istringstream is(s);
  std::vector<int> out;
  int v;
  while (is >> v) out.push_back(v);
  if (!is.eof()) throw InvalidInput("cannot parse integer list '" + s + "'");
  return out;
}

}  // namespace

json to_json(const Partition& p) { return p.parts(); }

json to_json(const SkewShape& s) { return {{"outer", to_json(s.outer())}, {"inner", to_json(s.inner())}}; }

json to_json(const InfiniteRibbon& r) {
  json steps = json::array();
  for (StepDir d : r.steps()) steps.push_back(std::string(1, step_char(d)));
  return {{"window_lo", r.window_lo()},
          {"steps", steps},
          {"tail_lo", std::string(1, step_char(r.tail_lo()))},
          {"tail_hi", std::string(1, step_char(r.tail_hi()))}};
}

json to_json(const RibbonDecomposition& d) {
  json copies = json::array();
  for (const auto& s : d.sections()) copies.push_back(s.copy);
  return {{"a", d.a_tuple()}, {"b", d.b_tuple()}, {"copies", copies}};
}

json to_json(const SymPoly& p) {
  json terms = json::array();
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    terms.push_back({{"m", to_json(it->first)}, {"coeff", integer_str(it->second)}});
  return {{"nvars", p.nvars()}, {"text", p.str()}, {"terms", terms}};
}

json to_json(const SchurExpansion& e) {
  json terms = json::array();
  for (auto it = e.coeffs().rbegin(); it != e.coeffs().rend(); ++it)
    terms.push_back({{"s", to_json(it->first)}, {"coeff", integer_str(it->second)}});
  return {{"nvars", e.nvars()}, {"text", e.str()}, {"terms", terms}, {"schur_positive", e.schur_positive()}};
}

json to_json(const ShuffleTableau& T) {
  return {{"red", {{"shape", to_json(T.diagram->red_shape())}, {"entries", T.red}}},
          {"blue", {{"shape", to_json(T.diagram->blue_shape())}, {"entries", T.blue}}}};
}

json to_json(const PositivityReport& r, bool timing) {
  json types = json::array();
  for (const auto& t : r.types) {
    json item{{"type", t.type.str()}, {"expansion", to_json(t.expansion)}, {"positive", t.positive}};
    if (timing) item["seconds"] = t.seconds;
    types.push_back(std::move(item));
  }
  return {{"nvars", r.nvars}, {"route", r.route}, {"pass", r.pass}, {"types", types}};
}

json to_json(const KLCertificate& c) {
  json neg = json::array();
  for (const auto& [lam, v] : c.negative) neg.push_back({{"s", to_json(lam)}, {"coeff", integer_str(v)}});
  return {{"w", c.w.str()}, {"expansion", to_json(c.expansion)}, {"negative", neg}};
}

json to_json(const KLReport& r) {
  json terms = json::array(), negs = json::array();
  for (const auto& c : r.terms) terms.push_back(to_json(c));
  for (const auto& c : r.negatives) negs.push_back(to_json(c));
  return {{"nvars", r.nvars}, {"pass", r.pass()}, {"immanants", terms}, {"negative_certificates", negs}};
}

json matrix_to_json(const SFMatrix& M) {
  json rows = json::array();
  for (int i = 0; i < M.n(); ++i) {
    json row = json::array();
    for (int j = 0; j < M.n(); ++j) row.push_back(expand_schur(M.at(i, j)).str());
    rows.push_back(row);
  }
  return rows;
}

Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("partition must be a JSON array");
  return Partition(j.get<std::vector<int>>());
}

SkewShape shape_from_json(const json& j) {
  if (j.is_string()) return parse_shape(j.get<std::string>());
  if (!j.is_object() || !j.contains("outer")) throw InvalidInput("shape needs an \"outer\" partition");
  Partition inner = j.contains("inner") ? partition_from_json(j.at("inner")) : Partition();
  return SkewShape(partition_from_json(j.at("outer")), inner);
}

InfiniteRibbon ribbon_from_json(const json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "row") return InfiniteRibbon::row();
    if (s == "column") return InfiniteRibbon::column();
    if (s == "hook") return InfiniteRibbon::hook();
    if (s.find(':') != std::string::npos) return parse_ribbon(s);
    throw InvalidInput("unknown ribbon name '" + s + "'");
  }
  if (!j.is_object()) throw InvalidInput("ribbon must be an object");
  std::vector<StepDir> steps;
  if (j.contains("steps")) {
    const auto& st = j.at("steps");
    if (st.is_string()) {
      for (char c : st.get<std::string>()) steps.push_back(step_from_char(c));
    } else {
      for (const auto& s : st) steps.push_back(dir_from_json(s));
    }
  }
  return InfiniteRibbon(j.value("window_lo", 0), std::move(steps), dir_from_json(j.at("tail_lo")),
                        dir_from_json(j.at("tail_hi")));
}

InfiniteRibbon parse_ribbon(const std::string& text) {
  auto c1 = text.find(':');
  auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
  if (c2 == std::string::npos) throw InvalidInput("ribbon text must look like WINDOW_LO:STEPS:TAILS");
  int lo;
  try {
    lo = std::stoi(text.substr(0, c1));
  } catch (const std::exception&) {
    throw InvalidInput("bad window start in '" + text + "'");
  }
  std::vector<StepDir> steps;
  for (char ch : text.substr(c1 + 1, c2 - c1 - 1)) steps.push_back(step_from_char(ch));
  std::string tails = text.substr(c2 + 1);
  if (tails.size() != 2) throw InvalidInput("ribbon tails must be two letters, e.g. BL");
  return InfiniteRibbon(lo, std::move(steps), step_from_char(tails[0]), step_from_char(tails[1]));
}

SkewShape parse_shape(const std::string& text) {
  auto slash = text.find('/');
  Partition outer(parse_int_list(text.substr(0, slash)));
  Partition inner = slash == std::string::npos ? Partition() : Partition(parse_int_list(text.substr(slash + 1)));
  return SkewShape(outer, inner);
}

json load(const std::string& text_or_path) {
  std::string text = text_or_path;
  std::error_code ec;
  if (std::filesystem::is_regular_file(text_or_path, ec)) {
    std::ifstream in(text_or_path);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace ril::json
