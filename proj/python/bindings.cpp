#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gpea/axioms.hpp"
#include "gpea/center.hpp"
#include "gpea/cli.hpp"
#include "gpea/construct.hpp"
#include "gpea/corpus.hpp"
#include "gpea/cover.hpp"
#include "gpea/errors.hpp"
#include "gpea/exocenter.hpp"
#include "gpea/laws.hpp"
#include "gpea/model_file.hpp"
#include "gpea/typetheory.hpp"

namespace py = pybind11;
using namespace gpea;

namespace {

ElementSet to_set(const std::vector<Element>& xs) {
  ElementSet s;
  for (Element x : xs) s.insert(x);
  return s;
}

std::vector<std::vector<Element>> exocenter_tables(const FiniteGpea& e) {
  std::vector<std::vector<Element>> out;
  for (const auto& p : exocenter(e)) out.push_back(p.values());
  return out;
}

/// Fundamental triple as the images of pi1, pi2, pi3.
std::vector<std::vector<Element>> fundamental(const FiniteGpea& e, const std::vector<Element>& k) {
  const CoverSystem covers(e);
  const TdContext ctx = td_context(e, covers, central_elements(e), to_set(k));
  const Fundamental f = fundamental_decomposition(covers, ctx);
  const auto& g = covers.gex();
  return {g[f.pi1].image().elements(), g[f.pi2].image().elements(), g[f.pi3].image().elements()};
}

py::tuple run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite generalized pseudoeffect algebras";

  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<InvalidModel>(m, "InvalidModel", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_ValueError);

  py::class_<FiniteGpea>(m, "FiniteGpea")
      .def_property_readonly("size", &FiniteGpea::size)
      .def("oplus", &FiniteGpea::oplus)
      .def("leq", &FiniteGpea::leq)
      .def("top", &FiniteGpea::top)
      .def("name", &FiniteGpea::name)
      .def("atoms", [](const FiniteGpea& e) { return e.atoms().elements(); })
      .def("__len__", &FiniteGpea::size);

  m.def("parse_model", &parse_model, py::arg("text"));
  m.def("serialize_model", &serialize_model, py::arg("model"));
  m.def("violations", [](const std::string& text) {
    std::vector<std::string> tags;
    const ViolationReport report = check_gpea(parse_table(text).table);
    for (const auto& v : report.violations()) tags.push_back(v.tag);
    return tags;
  }, py::arg("text"), "Axiom tags violated by a model file, one per violation.");
  m.def("model_d4", &model_d4);
  m.def("model_v3", &model_v3);
  m.def("chain", &chain, py::arg("n"));
  m.def("enumerate_gpeas", [](std::size_t n) { return enumerate_gpeas(n); }, py::arg("n"));
  m.def("is_commutative", &is_commutative);
  m.def("exocenter", &exocenter_tables, py::arg("model"));
  m.def("center", [](const FiniteGpea& e) { return central_elements(e).elements(); }, py::arg("model"));
  m.def("is_cogpea", [](const FiniteGpea& e) { return is_cogpea(e, CoverSystem(e)).holds; }, py::arg("model"));
  m.def("closure_gamma", [](const FiniteGpea& e, const std::vector<Element>& q) {
    return closure_gamma(e, CoverSystem(e), to_set(q)).elements();
  }, py::arg("model"), py::arg("q"));
  m.def("fundamental", &fundamental, py::arg("model"), py::arg("k"));
  m.def("law_ids", [] {
    std::vector<std::string> ids;
    for (const auto& l : law_registry()) ids.push_back(l.id);
    return ids;
  });
  m.def("verify_laws", [](const FiniteGpea& e, const std::string& id, const std::vector<std::string>& sel) {
    py::list out;
    for (const auto& r : verify_laws(e, id, sel)) {
      py::dict d;
      d["law"] = r.law_id;
      d["model"] = r.model_id;
      d["pass"] = r.pass;
      d["witness"] = r.witness;
      d["exhaustive"] = r.exhaustive;
      out.append(d);
    }
    return out;
  }, py::arg("model"), py::arg("model_id") = "model", py::arg("selection") = std::vector<std::string>{});
  m.def("run", &run, py::arg("args"), "Runs a command line; returns (status, stdout, stderr).");
}
