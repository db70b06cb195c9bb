#include "comat/run.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

using comat::run::Options;

std::string run_single(const std::string& command, const std::string& doc, const Options& opts) {
  auto res = comat::run::run_command(command, {{"<python>", doc}}, opts);
  if (res.exit_code == 1) {
    const auto& results = res.report.at("results");
    std::string msg = "input error";
    if (!results.empty() && results.at(0).contains("error"))
      msg = results.at(0).at("error").get<std::string>();
    throw std::invalid_argument(msg);
  }
  return comat::io::dump_report(res.report);
}

Options make_options(int precision, int bound, int slack, int degree, const std::string& side,
                     bool oracle, bool dot) {
  Options o;
  o.precision = precision;
  o.bound = bound;
  o.slack = slack;
  o.degree = degree;
  o.side = side;
  o.oracle = oracle;
  o.dot = dot;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact comatrix coalgebra computations: verification, Ext-quivers, "
            "Rat-splitting decisions and torsion splitting";

  m.def(
      "example",
      [](const std::string& label, int n) {
        return comat::io::dump_report(comat::run::run_example(label, n));
      },
      py::arg("label"), py::arg("n") = 3,
      "emit a named example as a JSON document (divided-power, example-4-2, "
      "example-4-2-spec, example-4-2-coalgebra, example-sec2, cyclic-monomial, "
      "example-4-6, artinian-asymmetry, artinian-symmetric, divided-power-spec)");

  m.def(
      "verify",
      [](const std::string& doc) { return run_single("verify", doc, Options{}); },
      py::arg("document"), "verify coalgebra / context / bicomodule axioms of a JSON document");

  m.def(
      "dual",
      [](const std::string& doc) { return run_single("dual", doc, Options{}); },
      py::arg("document"), "convolution algebra of a coalgebra document");

  m.def(
      "ext_quiver",
      [](const std::string& doc, int degree, bool dot) {
        return run_single("ext-quiver", doc, make_options(16, -1, 4, degree, "both", false, dot));
      },
      py::arg("document"), py::arg("degree") = -1, py::arg("dot") = false,
      "Ext-quiver of a quiver-spec or pointed coalgebra document");

  m.def(
      "serial",
      [](const std::string& doc, const std::string& side) {
        return run_single("serial", doc, make_options(16, -1, 4, -1, side, false, false));
      },
      py::arg("document"), py::arg("side") = "both", "serial-ness of a monomial spec");

  m.def(
      "splitting",
      [](const std::string& doc, const std::string& side, int degree) {
        return run_single("splitting", doc, make_options(16, -1, 4, degree, side, false, false));
      },
      py::arg("document"), py::arg("side") = "both", py::arg("degree") = -1,
      "decide the left/right finite Rat-splitting property of a monomial spec");

  m.def(
      "rat",
      [](const std::string& doc, int precision, int bound, int slack, bool oracle) {
        return run_single("rat", doc, make_options(precision, bound, slack, -1, "both", oracle, false));
      },
      py::arg("document"), py::arg("precision") = 16, py::arg("bound") = -1, py::arg("slack") = 4,
      py::arg("oracle") = false,
      "rational/torsion part of a module presentation or triangular module");

  m.def(
      "artinian",
      [](const std::string& doc) { return run_single("artinian", doc, Options{}); },
      py::arg("document"), "triangular Artinian criterion on an artinian-query document");

  m.def(
      "instantiate",
      [](const std::string& doc, int degree) {
        comat::io::Document d = comat::io::parse_document(doc);
        if (!d.spec) throw std::invalid_argument("instantiate expects a quiver-spec document");
        comat::io::Document out;
        out.coalgebra = comat::instantiate(*d.spec, degree);
        return comat::io::dump_report(comat::io::print_document(out));
      },
      py::arg("document"), py::arg("degree"),
      "truncated monomial coalgebra of a quiver-spec document as a coalgebra document");

  m.attr("__version__") = "0.1.0";
}
