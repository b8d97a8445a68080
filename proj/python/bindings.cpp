#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ribbonimm/errors.hpp"
#include "ribbonimm/json_io.hpp"
#include "ribbonimm/klbase.hpp"
#include "ribbonimm/ribbonmat.hpp"
#include "ribbonimm/shuffle.hpp"

namespace py = pybind11;
using namespace ril;

namespace {

py::object to_py(const Integer& x) {
  std::string s = x.str();
  return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::dict coeff_dict(const std::map<Partition, Integer>& coeffs) {
  py::dict d;
  for (const auto& [lambda, c] : coeffs) d[py::tuple(py::cast(lambda.parts()))] = to_py(c);
  return d;
}

SkewShape shape_arg(const py::object& o) {
  if (py::isinstance<SkewShape>(o)) return o.cast<SkewShape>();
  return json::parse_shape(o.cast<std::string>());
}

InfiniteRibbon ribbon_arg(const py::object& o) {
  if (py::isinstance<InfiniteRibbon>(o)) return o.cast<InfiniteRibbon>();
  return json::parse_ribbon(o.cast<std::string>());
}

std::vector<std::vector<SymPoly>> rows_of(const SFMatrix& M) {
  std::vector<std::vector<SymPoly>> out(static_cast<std::size_t>(M.n()));
  for (int i = 0; i < M.n(); ++i)
    for (int j = 0; j < M.n(); ++j) out[static_cast<std::size_t>(i)].push_back(M.at(i, j));
  return out;
}

std::map<std::string, SymPoly> by_name(const std::map<NoncrossingMatching, SymPoly>& m) {
  std::map<std::string, SymPoly> out;
  for (const auto& [tau, p] : m) out.emplace(tau.str(), p);
  return out;
}

}  // namespace

PYBIND11_MODULE(_ribbonimm, m) {
  m.doc() = "Ribbon decompositions, Temperley-Lieb and Kazhdan-Lusztig immanants";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
  py::register_exception<IncompatibleShape>(m, "IncompatibleShape", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());

  py::class_<SkewShape>(m, "SkewShape")
      .def(py::init([](std::vector<int> outer, std::vector<int> inner) {
             return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
           }),
           py::arg("outer"), py::arg("inner") = std::vector<int>{})
      .def_static("parse", &json::parse_shape)
      .def_property_readonly("outer", [](const SkewShape& s) { return s.outer().parts(); })
      .def_property_readonly("inner", [](const SkewShape& s) { return s.inner().parts(); })
      .def_property_readonly("size", &SkewShape::size)
      .def("is_ribbon", &SkewShape::is_ribbon)
      .def("is_connected", &SkewShape::is_connected)
      .def(py::self == py::self)
      .def("__str__", &SkewShape::str)
      .def("__repr__", [](const SkewShape& s) { return "SkewShape(" + s.str() + ")"; });

  py::class_<InfiniteRibbon>(m, "Ribbon")
      .def_static("parse", &json::parse_ribbon, "Names row, column, hook or text like -4:BBLLLBBLBLLL:BL")
      .def_static("row", &InfiniteRibbon::row)
      .def_static("column", &InfiniteRibbon::column)
      .def_static("hook", &InfiniteRibbon::hook)
      .def("section", [](const InfiniteRibbon& r, int a, int b) { return ribbon_section_shape(r, a, b); })
      .def("__repr__", [](const InfiniteRibbon& r) { return "Ribbon(" + json::to_json(r).dump() + ")"; });

  py::class_<SymPoly>(m, "SymPoly")
      .def_property_readonly("nvars", &SymPoly::nvars)
      .def_property_readonly("degree", &SymPoly::degree)
      .def("is_zero", &SymPoly::is_zero)
      .def("monomials", [](const SymPoly& p) { return coeff_dict(p.coeffs()); },
           "Coefficients of the monomial symmetric functions")
      .def("schur", [](const SymPoly& p) { return coeff_dict(expand_schur(p).coeffs()); },
           "Coefficients in the Schur basis")
      .def("schur_positive", [](const SymPoly& p) { return is_schur_positive(p).first; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__str__", [](const SymPoly& p) { return expand_schur(p).str(); })
      .def("__repr__", [](const SymPoly& p) { return "SymPoly(" + expand_schur(p).str() + ")"; });

  m.def("skew_schur", [](const py::object& shape, int N) { return skew_schur(shape_arg(shape), N); },
        py::arg("shape"), py::arg("nvars"));
  m.def("schur", [](std::vector<int> lambda, int N) { return schur_poly(Partition(std::move(lambda)), N); },
        py::arg("partition"), py::arg("nvars"));

  py::class_<RibbonDecomposition>(m, "Decomposition")
      .def_property_readonly("shape", &RibbonDecomposition::shape)
      .def_property_readonly("ribbon", &RibbonDecomposition::ribbon)
      .def_property_readonly("length", &RibbonDecomposition::length)
      .def_property_readonly("a", &RibbonDecomposition::a_tuple)
      .def_property_readonly("b", &RibbonDecomposition::b_tuple)
      .def("to_json", [](const RibbonDecomposition& d) { return json::to_json(d).dump(); });

  m.def("decompose", [](const py::object& shape, const py::object& ribbon) {
          return decompose(shape_arg(shape), ribbon_arg(ribbon));
        },
        py::arg("shape"), py::arg("ribbon"));

  m.def("matrix", [](const RibbonDecomposition& d, int N) { return rows_of(build(d, N).matrix); },
        py::arg("decomposition"), py::arg("nvars"));
  m.def("check_determinant", [](const RibbonDecomposition& d, int N) { return check_determinant(build(d, N)); },
        py::arg("decomposition"), py::arg("nvars"));
  m.def("principal_minor",
        [](const RibbonDecomposition& d, int N, const std::vector<int>& I) {
          return principal_minor(build(d, N), I).decomposition;
        },
        py::arg("decomposition"), py::arg("nvars"), py::arg("indices"));

  m.def("immanants",
        [](const RibbonDecomposition& d, int N, const std::string& method) {
          return by_name(immanants(d, N, parse_route(method)));
        },
        py::arg("decomposition"), py::arg("nvars"), py::arg("method") = "def",
        "Temperley-Lieb immanants keyed by matching, e.g. (L1-R1)(L2-L3)(R2-R3)");

  m.def("positivity_report",
        [](const RibbonDecomposition& d, int N) { return json::to_json(theorem1_harness(d, N)).dump(); },
        py::arg("decomposition"), py::arg("nvars"));

  m.def("kl_polynomial",
        [](const std::string& x, const std::string& w) {
          Permutation px = Permutation::parse(x), pw = Permutation::parse(w);
          if (px.n() != pw.n()) throw InvalidInput("permutations of different sizes");
          return kl_polynomials(px.n()).poly(px, pw);
        },
        py::arg("x"), py::arg("w"), "Coefficients of P_{x,w} by degree");
  m.def("bruhat_leq", [](const std::string& x, const std::string& w) {
    return bruhat_leq(Permutation::parse(x), Permutation::parse(w));
  });

  m.def("kl_immanants",
        [](const RibbonDecomposition& d, int N) {
          std::map<std::string, SymPoly> out;
          for (const auto& [w, p] : imm_kl_all(build(d, N).matrix)) out.emplace(w.str(), p);
          return out;
        },
        py::arg("decomposition"), py::arg("nvars"));

  m.def("fixture", [](const std::string& name, int N) { return rows_of(fixture_matrix(name, N)); },
        py::arg("name"), py::arg("nvars"));
}
