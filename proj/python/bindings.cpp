#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "aslkit/error.hpp"
#include "aslkit/exact.hpp"
#include "aslkit/lattice.hpp"
#include "aslkit/msl.hpp"
#include "aslkit/poset_io.hpp"
#include "aslkit/report_json.hpp"
#include "aslkit/veronese.hpp"
#include "commands.hpp"

namespace py = pybind11;
using namespace aslkit;

namespace {

std::string tuple_poset_json(const TuplePoset& t) { return poset_to_json(t.poset); }

}  // namespace

PYBIND11_MODULE(_aslkit, m) {
  m.doc() = "Native core of aslkit; the pure-Python package wraps these calls.";
  m.attr("__version__") = kVersion;

  // Owned for the lifetime of the interpreter; never released.
  static py::handle error_type = py::exception<Error>(m, "AslkitError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = error_type(py::str(e.what()));
      exc.attr("code") = std::string(to_string(e.code()));
      exc.attr("witness") = e.witness();
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs aslcheck in-process and returns (exit code, stdout, stderr).");

  m.def("h_poset", [](int n, int d) { return tuple_poset_json(h_poset(n, d)); }, py::arg("n"), py::arg("d"));
  m.def(
      "zigzag", [](const std::string& poset, std::size_t d) { return tuple_poset_json(zigzag(parse_poset_json(poset), d)); },
      py::arg("poset"), py::arg("d"));
  m.def(
      "rank3_veronese",
      [](const std::string& poset, std::size_t d, bool force) {
        return tuple_poset_json(rank3_veronese(parse_poset_json(poset), d, force));
      },
      py::arg("poset"), py::arg("d"), py::arg("force") = false);
  m.def(
      "is_distributive",
      [](const std::string& poset) { return is_distributive(LatticeView(parse_poset_json(poset))).distributive; },
      py::arg("poset"));
  m.def(
      "msl_report",
      [](int n, int d, int j, std::uint64_t seed, const std::string& field, int max_m) {
        auto report = msl_suite(n, d, j, seed, FieldSpec::parse(field), max_m);
        return report_to_json(report, fnv1a64_hex("msl"), false).dump(2);
      },
      py::arg("n"), py::arg("d"), py::arg("j"), py::arg("seed") = 1, py::arg("field") = "fp:32003",
      py::arg("max_m") = 2);
}
