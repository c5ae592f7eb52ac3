#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "homlink/idealops.hpp"
#include "homlink/liaison.hpp"
#include "homlink/parse.hpp"
#include "homlink/resolution.hpp"
#include "homlink/script.hpp"

namespace py = pybind11;
using namespace homlink;

namespace {

// Python objects cross the boundary through JSON text.
py::object to_python(const cli::Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<std::string> strings(const std::vector<Polynomial>& forms) {
  std::vector<std::string> out;
  for (const auto& f : forms) out.push_back(f.to_string());
  return out;
}

std::vector<Polynomial> forms(const RingPtr& R, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, R));
  return out;
}

py::dict link_step(const LinkStep& s) {
  py::dict d;
  d["sequence"] = strings(s.sequence.forms);
  d["degrees"] = s.sequence.degrees;
  d["target"] = s.target;
  d["min_degrees"] = s.min_degrees;
  d["minimal"] = s.minimal;
  d["back_verified"] = s.back_verified;
  d["method"] = s.method;
  return d;
}

}  // namespace

PYBIND11_MODULE(_homlink, m) {
  m.doc() = "Exact homogeneous liaison computations";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ScriptError>(m, "ScriptError", PyExc_ValueError);
  py::register_exception<LinkError>(m, "LinkError", PyExc_RuntimeError);

  py::class_<Ring, std::shared_ptr<Ring>>(m, "Ring")
      .def(py::init([](std::vector<std::string> names, const std::string& field) {
             return std::const_pointer_cast<Ring>(make_ring(std::move(names), Field::parse(field)));
           }),
           py::arg("variables"), py::arg("field") = "QQ")
      .def_property_readonly("variables", [](const Ring& r) { return r.names(); })
      .def_property_readonly("field", [](const Ring& r) { return r.field().name(); })
      .def("__repr__", &Ring::describe);

  py::class_<Ideal>(m, "Ideal")
      .def(py::init([](const std::shared_ptr<Ring>& R, const std::vector<std::string>& gens) {
             RingPtr r = R;
             return Ideal(r, forms(r, gens));
           }),
           py::arg("ring"), py::arg("generators"))
      .def_property_readonly("generators", [](const Ideal& I) { return strings(I.generators()); })
      .def_property_readonly("minimal_generators", [](const Ideal& I) { return strings(I.minimal_generators()); })
      .def_property_readonly("groebner_basis", [](const Ideal& I) { return strings(I.groebner().elements); })
      .def("contains", [](const Ideal& I, const std::string& f) { return I.contains(parse_polynomial(f, I.ring_ptr())); })
      .def("__eq__", [](const Ideal& a, const Ideal& b) { return a == b; })
      .def("__str__", &Ideal::to_string)
      .def("__repr__", [](const Ideal& I) { return "Ideal(" + I.to_string() + ")"; });

  m.def("parse", [](const std::shared_ptr<Ring>& R, const std::string& text) {
    return parse_polynomial(text, R).to_string();
  }, "Parse a polynomial and return its normalized printed form.");
  m.def("parse_ideal", [](const std::string& text) { return parse_ideal_file(text).ideal; },
        "Ideal from the text of an ideal file.");
  m.def("gb", [](const Ideal& I) { return strings(I.groebner().elements); });
  m.def("hilbert", [](const Ideal& I, int max_degree) {
    HilbertData h = hilbert(I, max_degree);
    py::dict d;
    d["dim"] = h.dim;
    d["degree"] = h.degree;
    d["numerator"] = h.numerator;
    d["h_vector"] = h.h_vector;
    d["values"] = h.values;
    return d;
  }, py::arg("ideal"), py::arg("max_degree") = 10);
  m.def("betti", [](const Ideal& I) {
    BettiTable b = betti_table(I);
    return b.entries();
  }, "Graded Betti numbers {(i, j): b} of the ideal (i = 0 counts generators).");
  m.def("betti_grid", [](const Ideal& I) { return betti_table(I).to_grid(); });
  m.def("regularity", [](const Ideal& I) { return regularity(betti_table(I)); });
  m.def("height", [](const Ideal& I) { return height(I); });
  m.def("krull_dim", [](const Ideal& I) { return krull_dim(I); });
  m.def("is_cohen_macaulay", [](const Ideal& I) { return is_cohen_macaulay(I); });
  m.def("quotient", [](const Ideal& a, const Ideal& b) { return ideal_quotient(a, b); });
  m.def("mindeg", [](const Ideal& I) { return min_reg_seq_degrees(I); });
  m.def("find_reg_seq", [](const Ideal& I, const std::vector<int>& degrees, std::uint64_t seed) -> py::object {
    auto s = find_reg_seq(I, degrees, seed);
    if (!s) return py::none();
    return py::cast(strings(s->forms));
  }, py::arg("ideal"), py::arg("degrees"), py::arg("seed") = 1);
  m.def("link", [](const Ideal& I, const std::vector<std::string>& seq) {
    return link_step(link(I, is_regular_sequence(forms(I.ring_ptr(), seq)), true));
  }, py::arg("ideal"), py::arg("sequence"));
  m.def("chain_verify", [](const std::string& text) {
    ChainReport rep = chain_verify(parse_chain_script(text));
    py::list steps;
    for (const auto& s : rep.steps) {
      py::dict d = link_step(s.step);
      d["expect_matched"] = s.expect_matched ? py::cast(*s.expect_matched) : py::none();
      steps.append(d);
    }
    py::dict d;
    d["steps"] = steps;
    d["complete"] = rep.complete;
    d["all_minimal"] = rep.all_minimal;
    d["terminal_is_ci"] = rep.terminal_is_ci;
    d["minimally_licci"] = rep.minimally_licci();
    d["failed_step"] = rep.failed_step;
    d["failure"] = rep.failure;
    return d;
  }, "Replay a chain script given as text.");
  m.def("monomial_scan", [](const Ideal& I) {
    LicciScan s = monomial_licci_scan(I);
    std::vector<std::string> sharp;
    for (const auto& mono : s.fixpoint_sharp) sharp.push_back(I.ring().monomial_to_string(mono));
    py::dict d;
    d["verdict"] = to_string(s.verdict);
    d["trace"] = s.trace;
    d["fixpoint_sharp"] = sharp;
    d["sharp_height"] = s.sharp_height;
    return d;
  });
  m.def("construct_thm32", [](std::vector<int> params, std::uint64_t seed, int nvars, std::uint32_t prime) {
    if (params.size() != 4) throw std::invalid_argument("need four parameters");
    std::vector<std::string> names;
    for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
    auto R = make_ring(names, Field::prime(prime));
    Thm32Instance inst = construct_thm32(R, Thm32Params{params[0], params[1], params[2], params[3], seed});
    py::dict d;
    d["ideal"] = inst.I;
    d["I1"] = inst.I1;
    d["forms"] = py::dict(py::arg("L1") = inst.L1.to_string(), py::arg("L2") = inst.L2.to_string(),
                          py::arg("F1") = inst.F1.to_string(), py::arg("F2") = inst.F2.to_string(),
                          py::arg("F3") = inst.F3.to_string(), py::arg("F4") = inst.F4.to_string());
    d["draws"] = inst.draws;
    return d;
  }, py::arg("params") = std::vector<int>{1, 4, 5, 8}, py::arg("seed") = 1, py::arg("nvars") = 4,
     py::arg("prime") = 32003);
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    cli::Json report;
    int code = cli::run(args, out, err, &report);
    return py::make_tuple(code, to_python(report), out.str(), err.str());
  }, "Run a homlink command line; returns (exit_code, report, stdout, stderr).");
}
