#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ptdescent/catalog.hpp"
#include "ptdescent/cli.hpp"
#include "ptdescent/document.hpp"

namespace py = pybind11;
using namespace ptdescent;

namespace {

Expectation parse_expectation(const std::optional<std::string>& s) {
  if (!s) return Expectation::unspecified;
  if (*s == "none") return Expectation::none;
  if (*s == "some") return Expectation::some;
  if (*s == "unique") return Expectation::unique;
  if (*s == "multiple") return Expectation::multiple;
  throw py::value_error("expect must be one of none, some, unique, multiple");
}

Report run_command(const std::string& command, const std::vector<std::string>& args,
                   std::size_t modulus, const std::optional<std::string>& method,
                   std::optional<std::size_t> bound, const std::optional<std::string>& expect,
                   const std::string& corpus, bool dump) {
  CliOptions o;
  o.modulus = modulus;
  if (method) {
    if (*method == "oracle") {
      o.method = ExtendMethod::oracle;
    } else if (*method == "propagate") {
      o.method = ExtendMethod::propagate;
    } else {
      throw py::value_error("method must be oracle or propagate");
    }
  }
  o.bound = bound;
  o.expect = parse_expectation(expect);
  o.corpus = corpus;
  o.dump = dump;
  py::gil_scoped_release release;
  return run(command, args, o);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Descent, action extension and centralization checks on finite algebras";

  py::class_<ReportVerdict>(m, "Verdict")
      .def_readonly("name", &ReportVerdict::name)
      .def_readonly("passed", &ReportVerdict::pass)
      .def_readonly("inconclusive", &ReportVerdict::inconclusive)
      .def_readonly("detail", &ReportVerdict::detail)
      .def("__repr__", [](const ReportVerdict& v) {
        return "<Verdict " + v.name + (v.inconclusive ? " inconclusive" : v.pass ? " pass" : " fail") + ">";
      });

  py::class_<ReportWitness>(m, "Witness")
      .def_readonly("what", &ReportWitness::what)
      .def_readonly("indices", &ReportWitness::indices)
      .def_readonly("labels", &ReportWitness::labels);

  py::class_<Report>(m, "Report")
      .def_readonly("command", &Report::command)
      .def_readonly("verdicts", &Report::verdicts)
      .def_readonly("witnesses", &Report::witnesses)
      .def_readonly("notes", &Report::notes)
      .def_readonly("bound_notes", &Report::bound_notes)
      .def_readonly("error", &Report::error)
      .def_readonly("dump", &Report::dump)
      .def_readonly("elapsed_ms", &Report::elapsed_ms)
      .def_property_readonly("inconclusive", &Report::inconclusive)
      .def_property_readonly("exit_code", &Report::exit_code)
      .def("text", &Report::text)
      .def("machine", &Report::machine);

  m.def("run", &run_command, py::arg("command"), py::arg("args") = std::vector<std::string>{},
        py::arg("modulus") = 2, py::arg("method") = std::nullopt, py::arg("bound") = std::nullopt,
        py::arg("expect") = std::nullopt, py::arg("corpus") = "", py::arg("dump") = false,
        "Run one subcommand and return its report.");

  m.def(
      "roundtrip",
      [](const std::string& text) { return emit_documents(parse_documents(text)); },
      py::arg("text"), "Parse documents and emit them in canonical form.");

  m.def(
      "small_groups",
      [] {
        std::vector<std::pair<std::string, std::size_t>> out;
        for (const auto& g : groups_up_to_12()) out.emplace_back(g->name(), g->size());
        return out;
      },
      "Names and orders of the groups of order at most 12.");

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
}
