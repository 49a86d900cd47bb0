#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "adelink/braid.hpp"
#include "adelink/reps.hpp"
#include "adelink/weyl.hpp"
#include "adelink/winding.hpp"

namespace py = pybind11;
using namespace adelink;

namespace {

RootSystem make_rs(const std::string& type) {
  return enumerate_roots(parse_diagram(type));
}

py::object json_to_py(const nlohmann::json& j) {
  py::module_ json = py::module_::import("json");
  return json.attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_adelink, m) {
  m.doc() = "Exact ADE root systems, Weyl representations and pure-braid "
            "abelianization";

  py::register_exception<Error>(m, "AdelinkError");

  m.def("roots", [](const std::string& type) {
    return json_to_py(root_system_to_json(make_rs(type)));
  }, py::arg("type"), "Root system as a dict {diagram, roots, positive}");

  m.def("num_roots", [](const std::string& type) {
    return make_rs(type).num_roots();
  }, py::arg("type"));

  m.def("weyl_order", [](const std::string& type, std::uint64_t cap) {
    return enumerate_group(make_rs(type), cap).size();
  }, py::arg("type"), py::arg("cap") = 1000000);

  m.def("abelianize", [](const std::string& type, const std::string& word) {
    RootSystem rs = make_rs(type);
    return json_to_py(ab_to_json(rs, adelink::abelianize(rs, parse_word(rs, word))));
  }, py::arg("type"), py::arg("word"),
     "Combinatorial abelianization of a pure word");

  m.def("oracle", [](const std::string& type, const std::string& word, int samples) {
    RootSystem rs = make_rs(type);
    OracleParams p;
    p.samples_per_segment = samples;
    NumericLinkingResult res = numeric_linking(rs, parse_word(rs, word), p);
    py::dict out;
    out["ab"] = json_to_py(ab_to_json(rs, res.ab));
    out["max_residual"] =
        res.residuals.empty()
            ? 0.0
            : *std::max_element(res.residuals.begin(), res.residuals.end());
    return out;
  }, py::arg("type"), py::arg("word"), py::arg("samples") = 64,
     "Numeric winding-number abelianization");

  m.def("is_pure", [](const std::string& type, const std::string& word) {
    RootSystem rs = make_rs(type);
    return adelink::is_pure(rs, parse_word(rs, word));
  }, py::arg("type"), py::arg("word"));

  m.def("verify", [](const std::string& lemma, const std::string& type) {
    RootSystem rs = make_rs(type);
    VerificationReport rep;
    if (lemma == "ses") rep = verify_ses(rs);
    else if (lemma == "nonsplit") rep = verify_nonsplit(rs);
    else if (lemma == "splitting-pab") rep = verify_splitting_lemma(rs, RepKind::Pab);
    else if (lemma == "splitting-zphi") rep = verify_splitting_lemma(rs, RepKind::ZPhi);
    else if (lemma == "mapfrompab") rep = verify_mapfrompab(rs);
    else if (lemma == "an-decomp") rep = verify_an_decomposition(rs.rank());
    else if (lemma == "positive-simple") rep = verify_positive_simple(rs);
    else if (lemma == "relations") rep = verify_relations(rs);
    else fail(ErrorCode::UnparsableSpec, "unknown lemma id " + lemma);
    return json_to_py(rep.to_json());
  }, py::arg("lemma"), py::arg("type"), "Run one lemma verifier");
}
