// Python bindings. Rationals cross the boundary as strings; structured
// results are returned as JSON text and decoded by the package wrapper.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "virasoro/errors.hpp"
#include "virasoro/json_io.hpp"

namespace py = pybind11;
using namespace vir;
using json_io::json;

namespace {

Rational R(const std::string& s) { return Rational::parse(s); }

std::string singular(const std::string& c_s, const std::string& h_s, int level, bool quotient) {
  if (level < 1) throw UserError("level must be at least 1");
  const Rational c = R(c_s), h = R(h_s);
  Presentation M = ModulePresentation::verma(c, h);
  if (quotient && level > 1) {
    const auto lower = verma_singular_generators(c, h, level - 1);
    if (!lower.empty()) M = ModulePresentation::generated(c, h, lower);
  }
  json out = json::array();
  for (const auto& s : singular_vectors(*M, level)) {
    json e = json_io::element(s);
    e["integral"] = format_pbw(primitive_integral(s));
    out.push_back(e);
  }
  return out.dump();
}

std::optional<int> degree(const std::string& c, const std::string& h, int max_level) {
  if (max_level < 1) throw UserError("max_level must be at least 1");
  return reducibility_degree(R(c), R(h), max_level);
}

std::string ppoly(const std::string& c_s, const std::string& h_s, const std::string& a_s, const std::string& b_s,
                  const std::string& method, int cutoff) {
  if (method != "phi" && method != "elim") throw UserError("method must be 'phi' or 'elim'");
  if (cutoff < 1) throw UserError("cutoff must be at least 1");
  const Rational c = R(c_s), h = R(h_s), a = R(a_s), b = R(b_s);
  json out = json::array();
  for (const auto& g : verma_singular_generators(c, h, cutoff, minimal_model_params(c) ? 0 : 1)) {
    out.push_back(json_io::ppoly(method == "phi" ? p_from_singular(c, h, g, a, b) : p_via_elimination(c, h, g, a, b)));
  }
  return out.dump();
}

std::string verdict_json(const std::string& a, const std::string& b, const std::string& c, const std::string& h,
                         int cutoff, bool cross_check, int window, int level_max) {
  VerdictOptions opt;
  opt.cutoff = cutoff;
  opt.run_cross_checks = cross_check;
  opt.window = {-window, window, level_max};
  const Verdict v = verdict(R(a), R(b), R(c), R(h), opt);
  json j = json_io::verdict(v);
  if (v.status == VerdictStatus::Reducible && !v.subquotient_weights.empty()) {
    j["intertwiner_types"] = json_io::intertwiners(predict_intertwiners(v));
  }
  return j.dump();
}

std::vector<std::pair<int, int>> fusion(int p, int q, int m1, int n1, int m2, int n2) {
  std::vector<std::pair<int, int>> out;
  for (const auto& l : fusion_product(make_label(p, q, m1, n1), make_label(p, q, m2, n2))) out.emplace_back(l.m, l.n);
  return out;
}

std::string oracle(const std::string& c_s, const std::string& h_s, const std::string& a_s, const std::string& b_s,
                   int window, int level_max, int margin) {
  if (window < 1 || level_max < 1 || margin < 0) throw UserError("window and level_max must be positive");
  const TruncationWindow w{-window, window, level_max};
  const TensorModule T(variant_of(R(a_s), R(b_s)),
                       ModulePresentation::irreducible(R(c_s), R(h_s), level_max + 2 * window + margin + 2));
  return json_io::evidence(chain_evidence(T, w, margin), w).dump();
}

std::string replay(const std::optional<std::string>& id) { return json_io::replay(run_replay(id)).dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<UserError>(m, "UserError", PyExc_ValueError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  m.def("singular_vectors", &singular, py::arg("c"), py::arg("h"), py::arg("level"), py::arg("quotient") = false);
  m.def("reducibility_degree", &degree, py::arg("c"), py::arg("h"), py::arg("max_level") = 12);
  m.def("ppoly", &ppoly, py::arg("c"), py::arg("h"), py::arg("alpha"), py::arg("beta"), py::arg("method") = "phi",
        py::arg("cutoff") = 12);
  m.def("verdict", &verdict_json, py::arg("alpha"), py::arg("beta"), py::arg("c"), py::arg("h"),
        py::arg("cutoff") = 12, py::arg("cross_check") = false, py::arg("window") = 6, py::arg("level_max") = 8);
  m.def("fusion", &fusion, py::arg("p"), py::arg("q"), py::arg("m1"), py::arg("n1"), py::arg("m2"), py::arg("n2"));
  m.def("minimal_table", [](int p, int q) { return json_io::minimal_table(p, q).dump(); });
  m.def("reducible_pairs", [](int p, int q, int mm, int n) { return json_io::reducible_pairs(make_label(p, q, mm, n)).dump(); });
  m.def("oracle", &oracle, py::arg("c"), py::arg("h"), py::arg("alpha"), py::arg("beta"), py::arg("window") = 6,
        py::arg("level_max") = 8, py::arg("margin") = 4);
  m.def("replay_case_ids", &replay_case_ids);
  m.def("replay", &replay, py::arg("case") = py::none());
}
