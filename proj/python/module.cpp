#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bitprobe/adversary.hpp"
#include "bitprobe/analysis.hpp"
#include "bitprobe/fixtures.hpp"
#include "bitprobe/storability.hpp"
#include "bitprobe/transform.hpp"
#include "bitprobe/universe.hpp"

namespace py = pybind11;
using namespace bitprobe;

namespace {

std::vector<std::string> names(const Scheme& scheme, const std::vector<Element>& elements) {
  std::vector<std::string> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(scheme.format(e));
  return out;
}

py::dict store(const Scheme& scheme, const std::string& subset) {
  auto result = can_store(scheme, parse_subset(scheme, subset));
  py::dict out;
  out["storable"] = result.storable();
  if (result.storable()) {
    const auto& a = result.assignment();
    out["a_bits"] = a.a_bits;
    out["b_bits"] = a.b_bits;
    out["c_bits"] = a.c_bits;
  } else {
    std::vector<std::string> steps;
    for (const auto& step : result.trace().steps) steps.push_back(describe(scheme, step));
    out["conflict_block"] = scheme.block_name(result.trace().block);
    out["steps"] = steps;
  }
  return out;
}

py::object bad(const Scheme& scheme, const std::string& e, const std::string& table, int level) {
  auto cert = badness(scheme, scheme.parse_element(e), parse_table(table), level);
  if (!cert) return py::none();
  py::dict out;
  out["j"] = cert->level;
  out["u"] = scheme.format(cert->u);
  out["v"] = scheme.format(cert->v);
  return out;
}

py::dict pair_dict(const Scheme& scheme, const AdversaryPair& pair) {
  py::dict out;
  out["s"] = names(scheme, pair.s);
  out["x"] = names(scheme, pair.x);
  out["target_block"] = scheme.block_name(pair.target_block);
  out["forbidden"] = std::string(to_string(pair.forbidden));
  out["certified"] = certify(scheme, pair).pass;
  return out;
}

Scheme fixture_by_name(const std::string& name) {
  if (name == "toy3") return fixtures::toy3();
  if (name == "fig1c") return fixtures::fig1c();
  if (name == "fig1c_good") return fixtures::fig1c_good();
  if (name == "dbl") return fixtures::dbl();
  throw std::invalid_argument("unknown fixture: " + name);
}

}  // namespace

PYBIND11_MODULE(_bitprobe, m) {
  m.doc() = "Restricted two-adaptive bitprobe schemes";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<RangeError>(m, "RangeError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  py::class_<Scheme>(m, "Scheme")
      .def_static("from_json", [](const std::string& text) { return parse_scheme(text); })
      .def_static("load", &load_scheme)
      .def("to_json", [](const Scheme& s) { return scheme_to_json(s); })
      .def_property_readonly("m", &Scheme::m)
      .def_property_readonly("s", &Scheme::s)
      .def_property_readonly("b", &Scheme::b)
      .def_property_readonly("blocks", &Scheme::blocks)
      .def("universe", [](const Scheme& s) { return names(s, s.universe()); })
      .def(
          "validate",
          [](const Scheme& s, bool relaxed) {
            std::vector<std::string> out;
            for (const auto& v : validate(s, {relaxed}).violations) out.push_back(v.message);
            return out;
          },
          py::arg("relaxed") = false)
      .def(py::self == py::self)
      .def("__repr__", [](const Scheme& s) {
        return "<Scheme m=" + std::to_string(s.m()) + " s=" + std::to_string(s.s()) +
               " b=" + std::to_string(s.b()) + ">";
      });

  m.def("fixture", &fixture_by_name, py::arg("name"));
  m.def("can_store", &store, py::arg("scheme"), py::arg("subset"));
  m.def(
      "i_universe",
      [](const Scheme& s, const std::string& e, const std::string& table, int level) {
        return names(s, i_universe(s, s.parse_element(e), parse_table(table), level));
      },
      py::arg("scheme"), py::arg("element"), py::arg("table"), py::arg("i"));
  m.def(
      "universe_via_paths",
      [](const Scheme& s, const std::string& e, const std::string& table, int level) {
        return names(s, universe_via_paths(s, s.parse_element(e), parse_table(table), level));
      },
      py::arg("scheme"), py::arg("element"), py::arg("table"), py::arg("i"));
  m.def("badness", &bad, py::arg("scheme"), py::arg("element"), py::arg("table"), py::arg("i"));
  m.def(
      "adversarial_pair",
      [](const Scheme& s, const std::string& e, const std::string& table, int level) {
        return pair_dict(s, adversarial_pair(s, s.parse_element(e), parse_table(table), level));
      },
      py::arg("scheme"), py::arg("element"), py::arg("table"), py::arg("i"));
  m.def(
      "two_table_contradiction",
      [](const Scheme& s, const std::string& block, int level) -> py::object {
        auto id = s.find_block(block);
        if (!id) throw std::invalid_argument("unknown block: " + block);
        auto pair = two_table_contradiction(s, *id, level);
        if (!pair) return py::none();
        return pair_dict(s, *pair);
      },
      py::arg("scheme"), py::arg("block"), py::arg("i"));
  m.def(
      "modify",
      [](const Scheme& s, int level) {
        auto result = modify(s, level);
        py::dict out;
        out["ok"] = result.report.ok();
        out["bad"] = result.partition.bad;
        out["good"] = result.partition.good;
        out["prime"] = result.final.prime;
        out["double_prime"] = result.final.double_prime;
        out["report_json"] = report_to_json(result.report);
        return out;
      },
      py::arg("scheme"), py::arg("i"));

  m.def("theorem_bound", &theorem_bound, py::arg("m"), py::arg("n"));
  m.def("general_bound", &general_bound, py::arg("m"), py::arg("n"));
  m.def(
      "compare_bounds",
      [](const std::vector<double>& ms, const std::vector<std::uint64_t>& ns) { return bounds_to_csv(compare_bounds(ms, ns)); },
      py::arg("m"), py::arg("n"));
  m.def(
      "synth_min_space",
      [](int n, int m_, int b, long budget) {
        auto r = synth_min_space(n, m_, b, {budget});
        py::dict out;
        out["minimal_s"] = r.minimal_s ? py::cast(*r.minimal_s) : py::none();
        out["witness"] = r.witness ? py::cast(*r.witness) : py::none();
        out["exhaustive"] = r.exhaustive;
        out["schemes_examined"] = r.schemes_examined;
        return out;
      },
      py::arg("n"), py::arg("m"), py::arg("b"), py::arg("budget") = 5'000'000L);
}
