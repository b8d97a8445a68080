// ribbonimm: command line front end.
//
// Exit codes: 0 success, 1 a checked property failed (a certificate is
// printed), 2 invalid input or enumeration budget exceeded, 3 internal error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "ribbonimm/corpus.hpp"
#include "ribbonimm/errors.hpp"
#include "ribbonimm/json_io.hpp"
#include "ribbonimm/klbase.hpp"
#include "ribbonimm/network.hpp"
#include "ribbonimm/shuffle.hpp"

using namespace ril;
using Json = nlohmann::json;
namespace jio = ril::json;

namespace {

struct Output {
  bool as_json = false;
  std::string out_file;

  void emit(const Json& j, const std::string& text) const {
    std::string body = as_json ? j.dump(2) + "\n" : text;
    if (out_file.empty()) {
      std::cout << body;
      return;
    }
    std::ofstream f(out_file);
    if (!f) throw InvalidInput("cannot write " + out_file);
    f << body;
  }
};

struct Instance {
  std::string shape_text;
  std::string ribbon_text = "row";
  std::string nvars_text = "auto";
};

bool looks_like_json(const std::string& s) {
  std::error_code ec;
  return (!s.empty() && (s.front() == '{' || s.front() == '"')) || std::filesystem::is_regular_file(s, ec);
}

SkewShape read_shape(const std::string& s) {
  if (s.empty()) throw InvalidInput("--shape is required");
  return looks_like_json(s) ? jio::shape_from_json(jio::load(s)) : jio::parse_shape(s);
}

InfiniteRibbon read_ribbon(const std::string& s) {
  return looks_like_json(s) ? jio::ribbon_from_json(jio::load(s)) : jio::ribbon_from_json(Json(s));
}

int resolve_nvars(const std::string& text, int degree) {
  if (text == "auto") return std::max(1, degree);
  try {
    std::size_t used = 0;
    int n = std::stoi(text, &used);
    if (used != text.size() || n < 1) throw InvalidInput("");
    return n;
  } catch (const std::exception&) {
    throw InvalidInput("--nvars must be a positive integer or 'auto'");
  }
}

std::vector<int> parse_index_list(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      cur += c;
    } else if (c != '{' && c != '}' && c != '[' && c != ']') {
      throw InvalidInput("bad index list '" + s + "'");
    }
  }
  return out;
}

std::string tuple_str(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

NoncrossingMatching parse_type(const std::string& s, int n) {
  NoncrossingMatching tau = s.find('(') != std::string::npos ? NoncrossingMatching::parse(s)
                                                             : perm_to_matching(Permutation::parse(s));
  if (tau.n() != n) throw InvalidInput("type has size " + std::to_string(tau.n()) + ", expected " + std::to_string(n));
  return tau;
}

Json instance_json(const RibbonDecomposition& dec) {
  Json j = jio::to_json(dec);
  j["shape"] = jio::to_json(dec.shape());
  j["ribbon"] = jio::to_json(dec.ribbon());
  return j;
}

// ------------------------------------------------------------ commands

int cmd_decompose(const Instance& in, const Output& out) {
  SkewShape shape = read_shape(in.shape_text);
  InfiniteRibbon R = read_ribbon(in.ribbon_text);
  RibbonDecomposition dec = decompose(shape, R);
  Json j = instance_json(dec);
  Json sections = Json::array();
  std::ostringstream text;
  text << "shape " << shape.str() << "\n";
  text << "a = " << tuple_str(dec.a_tuple()) << "\nb = " << tuple_str(dec.b_tuple()) << "\n";
  for (const auto& s : dec.sections()) {
    std::string sec = ribbon_section_shape(R, s.a, s.b).str();
    sections.push_back({{"copy", s.copy}, {"a", s.a}, {"b", s.b}, {"shape", sec}});
    text << "  copy " << s.copy << ": [" << s.a << "," << s.b << ") " << sec << "\n";
  }
  j["sections"] = sections;
  out.emit(j, text.str());
  return 0;
}

int cmd_matrix(const Instance& in, const std::string& minor_text, const Output& out) {
  SkewShape shape = read_shape(in.shape_text);
  RibbonDecomposition dec = decompose(shape, read_ribbon(in.ribbon_text));
  int N = resolve_nvars(in.nvars_text, shape.size());
  RibbonMatrix rm = build(dec, N);
  Json j = instance_json(dec);
  j["nvars"] = N;
  std::ostringstream text;
  if (!minor_text.empty()) {
    rm = principal_minor(rm, parse_index_list(minor_text));
    j["minor"] = parse_index_list(minor_text);
    j["minor_shape"] = jio::to_json(rm.decomposition.shape());
    j["minor_a"] = rm.decomposition.a_tuple();
    j["minor_b"] = rm.decomposition.b_tuple();
    text << "minor " << minor_text << " -> shape " << rm.decomposition.shape().str() << ", a = "
         << tuple_str(rm.decomposition.a_tuple()) << ", b = " << tuple_str(rm.decomposition.b_tuple()) << "\n";
  }
  j["matrix"] = jio::matrix_to_json(rm.matrix);
  SchurExpansion det = expand_schur(determinant(rm.matrix));
  SchurExpansion target = expand_schur(skew_schur(rm.decomposition.shape(), N));
  bool equal = det == target;
  j["det"] = jio::to_json(det);
  j["skew_schur"] = jio::to_json(target);
  j["equal"] = equal;
  for (int i = 0; i < rm.matrix.n(); ++i) {
    for (int k = 0; k < rm.matrix.n(); ++k) text << (k ? " | " : "  ") << expand_schur(rm.matrix.at(i, k)).str();
    text << "\n";
  }
  text << "det = " << det.str() << "\ns_shape = " << target.str() << "\n" << (equal ? "equal" : "DIFFERENT") << "\n";
  out.emit(j, text.str());
  return equal ? 0 : 1;
}

int cmd_imm(const Instance& in, const std::string& type_text, const std::string& method, const Output& out) {
  SkewShape shape = read_shape(in.shape_text);
  RibbonDecomposition dec = decompose(shape, read_ribbon(in.ribbon_text));
  int N = resolve_nvars(in.nvars_text, shape.size());
  ImmRoute route = parse_route(method);
  PositivityReport report = theorem1_harness(dec, N, route);
  Json j = instance_json(dec);
  Json r = jio::to_json(report);
  std::ostringstream text;
  text << "shape " << shape.str() << ", N = " << N << ", method " << report.route << "\n";
  bool pass = true;
  Json types = Json::array();
  std::optional<NoncrossingMatching> only;
  if (!type_text.empty()) only = parse_type(type_text, dec.length());
  for (std::size_t i = 0; i < report.types.size(); ++i) {
    const auto& t = report.types[i];
    if (only && !(t.type == *only)) continue;
    types.push_back(r["types"][i]);
    pass = pass && t.positive;
    text << t.type.str() << " : " << t.expansion.str() << (t.positive ? "" : "   NOT SCHUR POSITIVE") << "\n";
  }
  j["nvars"] = N;
  j["method"] = report.route;
  j["types"] = types;
  j["pass"] = pass;
  out.emit(j, text.str());
  return pass ? 0 : 1;
}

int fixture_degree(const std::string& name, const std::vector<int>& rows, const std::vector<int>& cols) {
  // Highest total size over the nonzero diagonal products of the submatrix.
  std::map<std::pair<int, int>, int> size;
  for (const auto& e : fixture_entries(name))
    if (e.shape || e.constant != 0) size[{e.row, e.col}] = e.shape ? e.shape->size() : 0;
  std::vector<int> perm(cols);
  std::sort(perm.begin(), perm.end());
  int best = 0;
  do {
    int total = 0;
    bool nonzero = true;
    for (std::size_t i = 0; i < rows.size() && nonzero; ++i) {
      auto it = size.find({rows[i], perm[i]});
      if (it == size.end()) nonzero = false;
      else total += it->second;
    }
    if (nonzero) best = std::max(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

SFMatrix kl_source_matrix(const Instance& in, const std::string& fixture, Json& j, int& N) {
  if (!fixture.empty()) {
    int n = 0;
    for (const auto& e : fixture_entries(fixture)) n = std::max({n, e.row, e.col});
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    N = resolve_nvars(in.nvars_text, fixture_degree(fixture, all, all));
    j["fixture"] = fixture;
    return fixture_matrix(fixture, N);
  }
  SkewShape shape = read_shape(in.shape_text);
  RibbonDecomposition dec = decompose(shape, read_ribbon(in.ribbon_text));
  N = resolve_nvars(in.nvars_text, shape.size());
  j = instance_json(dec);
  return build(dec, N).matrix;
}

int cmd_imm_kl(const Instance& in, const std::string& fixture, const std::string& perm_text, const Output& out) {
  Json j;
  int N = 0;
  SFMatrix A = kl_source_matrix(in, fixture, j, N);
  KLReport report;
  report.nvars = N;
  if (!perm_text.empty()) {
    Permutation w = Permutation::parse(perm_text);
    SchurExpansion e = expand_schur(imm_kl(w, A));
    KLCertificate c{w, e, e.negative_terms()};
    report.terms.push_back(c);
    if (!c.negative.empty()) report.negatives.push_back(c);
  } else {
    report = kl_positivity(A);
  }
  Json r = jio::to_json(report);
  j["nvars"] = N;
  j["immanants"] = r["immanants"];
  j["negative_certificates"] = r["negative_certificates"];
  j["pass"] = report.pass();
  std::ostringstream text;
  for (const auto& c : report.terms)
    text << "Imm_" << c.w.str() << " : " << c.expansion.str() << (c.negative.empty() ? "" : "   NOT SCHUR POSITIVE") << "\n";
  out.emit(j, text.str());
  return report.pass() ? 0 : 1;
}

int cmd_sweep(const SweepOptions& opts, const Output& out) {
  SweepReport report = run_sweep(opts);
  Json items = Json::array();
  std::ostringstream text;
  for (const auto& it : report.items) {
    Json item{{"shape", it.shape}, {"ribbon", it.ribbon}, {"a", it.a}, {"b", it.b}, {"nvars", it.nvars},
              {"status", it.skipped ? "skipped" : it.pass ? "pass" : "fail"}};
    if (!it.detail.empty()) item["detail"] = it.detail;
    items.push_back(std::move(item));
    if (!it.skipped && !it.pass)
      text << "FAIL " << it.shape << " ribbon " << it.ribbon << " : " << it.detail << "\n";
  }
  Json j{{"theorem", sweep_kind_name(report.kind)},
         {"max_cells", opts.corpus.max_cells},
         {"max_window", opts.corpus.max_window},
         {"instances", report.items.size()},
         {"passed", report.passed},
         {"failed", report.failed},
         {"skipped", report.skipped},
         {"items", items}};
  text << "sweep " << sweep_kind_name(report.kind) << ": " << report.items.size() << " instances, " << report.passed
       << " passed, " << report.failed << " failed, " << report.skipped << " skipped\n";
  out.emit(j, text.str());
  return report.pass() ? 0 : 1;
}

Json certificate(const SchurExpansion& e) {
  Json neg = Json::array();
  for (const auto& [lam, c] : e.negative_terms()) neg.push_back({{"s", jio::to_json(lam)}, {"coeff", c.str()}});
  return {{"expansion", jio::to_json(e)}, {"negative", neg}};
}

int cmd_remarks(const std::string& nvars_text, const Output& out) {
  std::ostringstream text;
  Json j;
  // Kazhdan-Lusztig immanant 2143 of a non-ribbon matrix.
  int N13 = resolve_nvars(nvars_text, fixture_degree("remark_1_3", {1, 2, 3, 4}, {1, 2, 3, 4}));
  SFMatrix A13 = fixture_matrix("remark_1_3", N13);
  SymPoly kl = imm_kl(Permutation::parse("2143"), A13);
  SymPoly tl = imm_tl(perm_to_matching(Permutation::parse("2143")), A13);
  SchurExpansion e13 = expand_schur(kl);
  Json c13 = certificate(e13);
  c13["nvars"] = N13;
  c13["w"] = "2143";
  c13["equals_tl_immanant"] = kl == tl;
  j["remark_1_3"] = c13;
  text << "remark_1_3 (N = " << N13 << "): Imm_2143 = " << e13.str() << "\n";
  text << "  equals the Temperley-Lieb immanant of " << perm_to_matching(Permutation::parse("2143")).str() << ": "
       << (kl == tl ? "yes" : "no") << "\n";

  // A non-principal minor and its complementary product.
  std::vector<int> rows{1, 2, 4}, cols{1, 2, 3}, rest_rows{3}, rest_cols{4};
  int N27 = resolve_nvars(nvars_text, fixture_degree("remark_2_7", rows, cols));
  SFMatrix A27 = fixture_matrix("remark_2_7", N27);
  auto zero_based = [](std::vector<int> v) {
    for (int& x : v) --x;
    return v;
  };
  SymPoly m = minor(A27, zero_based(rows), zero_based(cols));
  SymPoly comp = minor(A27, zero_based(rest_rows), zero_based(rest_cols));
  SchurExpansion e27 = expand_schur(m);
  SchurExpansion prod = expand_schur(m * comp);
  SymPoly odd_even = minor(A27, {0, 2}, {0, 2}) * minor(A27, {1, 3}, {1, 3});
  SchurExpansion eo = expand_schur(odd_even);
  Json c27 = certificate(e27);
  c27["nvars"] = N27;
  c27["rows"] = rows;
  c27["cols"] = cols;
  c27["complementary_product"] = certificate(prod);
  c27["odd_even_product"] = certificate(eo);
  j["remark_2_7"] = c27;
  text << "remark_2_7 (N = " << N27 << "): minor rows {1,2,4} cols {1,2,3} = " << e27.str() << "\n";
  text << "  times the complementary minor {3}x{4}: " << prod.str() << "\n";
  text << "  odd/even principal product: " << eo.str() << "\n";

  bool ok = !e13.negative_terms().empty() && kl == tl && !e27.negative_terms().empty() && prod.schur_positive() &&
            eo.schur_positive();
  j["reproduced"] = ok;
  text << (ok ? "both negative certificates reproduced; complementary products are Schur positive\n"
              : "REMARKS NOT REPRODUCED\n");
  out.emit(j, text.str());
  return ok ? 0 : 1;
}

int cmd_kl_table(int n, const Output& out) {
  const KLTable& t = kl_polynomials(n);
  Json rows = Json::array();
  const std::string dump = t.dump();
  std::istringstream is(dump);
  std::string line;
  while (std::getline(is, line)) {
    auto sp1 = line.find(' ');
    auto colon = line.find(" : ");
    rows.push_back({{"x", line.substr(0, sp1)}, {"w", line.substr(sp1 + 1, colon - sp1 - 1)}, {"P", line.substr(colon + 3)}});
  }
  out.emit(Json{{"n", n}, {"entries", rows}}, dump);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ribbon decomposition matrices and their immanants"};
  app.require_subcommand(1);
  Output out;
  auto add_output = [&](CLI::App* c) {
    c->add_flag("--json", out.as_json, "Print JSON instead of text");
    c->add_option("--out", out.out_file, "Write output to FILE");
  };
  auto add_instance = [&](CLI::App* c, Instance& in, bool need_shape) {
    auto* opt = c->add_option("--shape", in.shape_text, "Skew shape: \"9,7,7,5,2/2,1\", JSON text or file");
    if (need_shape) opt->required();
    c->add_option("--ribbon", in.ribbon_text,
                  "Ribbon: row, column, hook, \"-4:BBLLLBBLBLLL:BL\", JSON text or file")
        ->capture_default_str();
    c->add_option("--nvars", in.nvars_text, "Number of variables or 'auto' (the degree)")->capture_default_str();
  };

  Instance inst;
  auto* dec_cmd = app.add_subcommand("decompose", "Ending/starting tuples of a ribbon decomposition");
  add_instance(dec_cmd, inst, true);
  add_output(dec_cmd);

  std::string minor_text;
  auto* mat_cmd = app.add_subcommand("matrix", "Ribbon decomposition matrix and its determinant");
  add_instance(mat_cmd, inst, true);
  mat_cmd->add_option("--minor", minor_text, "Principal minor on 1-based indices, e.g. 1,3,4");
  add_output(mat_cmd);

  std::string type_text, method = "def";
  auto* imm_cmd = app.add_subcommand("imm", "Temperley-Lieb immanants and their Schur expansions");
  add_instance(imm_cmd, inst, false);
  imm_cmd->add_option("--type", type_text, "Matching like (L1-R1)(L2-L3)(R2-R3) or a 321-avoiding permutation");
  imm_cmd->add_option("--method", method, "def, shuffle, covers or crystal")->capture_default_str();
  add_output(imm_cmd);
  std::string perm_text, fixture;
  auto* kl_cmd = imm_cmd->add_subcommand("kl", "Kazhdan-Lusztig immanants");
  add_instance(kl_cmd, inst, false);
  kl_cmd->add_option("--perm", perm_text, "Permutation in one-line notation (all when omitted)");
  kl_cmd->add_option("--fixture", fixture, "Use a stored matrix: remark_1_3, remark_2_7 or example_2_3");
  add_output(kl_cmd);

  SweepOptions sweep;
  std::string theorem = "det", sweep_nvars = "auto";
  auto* sweep_cmd = app.add_subcommand("sweep", "Check a statement over the small-shape corpus");
  sweep_cmd->add_option("--max-cells", sweep.corpus.max_cells)->capture_default_str();
  sweep_cmd->add_option("--max-window", sweep.corpus.max_window)->capture_default_str();
  sweep_cmd->add_option("--theorem", theorem, "1.1, conj1.2, cor3.5 or det")->capture_default_str();
  sweep_cmd->add_option("--jobs", sweep.jobs)->capture_default_str();
  sweep_cmd->add_option("--nvars", sweep_nvars, "Number of variables or 'auto' (the shape size)")->capture_default_str();
  sweep_cmd->add_option("--max-length", sweep.max_length, "Skip instances with more sections")->capture_default_str();
  add_output(sweep_cmd);

  std::string remarks_nvars = "auto";
  auto* rem_cmd = app.add_subcommand("remarks", "Reproduce the two non-positivity remarks");
  rem_cmd->add_option("--nvars", remarks_nvars)->capture_default_str();
  add_output(rem_cmd);

  int kl_n = 4;
  auto* tab_cmd = app.add_subcommand("kl-table", "Dump Kazhdan-Lusztig polynomials of S_n");
  tab_cmd->add_option("--n", kl_n)->capture_default_str();
  add_output(tab_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*dec_cmd) return cmd_decompose(inst, out);
    if (*mat_cmd) return cmd_matrix(inst, minor_text, out);
    if (*kl_cmd) return cmd_imm_kl(inst, fixture, perm_text, out);
    if (*imm_cmd) return cmd_imm(inst, type_text, method, out);
    if (*sweep_cmd) {
      sweep.kind = parse_sweep_kind(theorem);
      sweep.nvars = sweep_nvars == "auto" ? 0 : resolve_nvars(sweep_nvars, 1);
      if (sweep.corpus.max_cells < 0 || sweep.corpus.max_window < 0) throw InvalidInput("corpus bounds must be nonnegative");
      return cmd_sweep(sweep, out);
    }
    if (*rem_cmd) return cmd_remarks(remarks_nvars, out);
    if (*tab_cmd) return cmd_kl_table(kl_n, out);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
