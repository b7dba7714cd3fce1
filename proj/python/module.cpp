#include "ospkw/cli.hpp"
#include "ospkw/serialize.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ospkw;

namespace {

Algebra algebra_of(const std::string& text) { return Algebra::parse(text); }

HookPartition partition_of(const std::string& text, const Algebra& alg) {
  return HookPartition::parse(text, alg.n, alg.m);
}

CharacterOptions options(unsigned threads, const std::string& weyl_sum) {
  if (weyl_sum != "naive" && weyl_sum != "orbit") fail(ErrorCode::ParseError, "weyl_sum must be 'naive' or 'orbit'");
  return CharacterOptions{threads, weyl_sum == "naive" ? WeylSum::Naive : WeylSum::Orbit};
}

}  // namespace

PYBIND11_MODULE(_ospkw, m) {
  m.doc() = "Exact characters of tame osp modules (JSON strings; see the ospkw package for dicts)";

  static py::exception<Error> exc(m, "OspError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, (std::string(error_code_name(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def("classify", [](const std::string& algebra, const std::string& partition, bool minus) {
    const Algebra alg = algebra_of(algebra);
    return to_json(is_tame(partition_of(partition, alg), alg, minus)).dump();
  }, py::arg("algebra"), py::arg("partition"), py::arg("minus") = false);

  m.def("character", [](const std::string& algebra, const std::string& partition, bool minus, unsigned threads,
                        const std::string& weyl_sum) {
    const Algebra alg = algebra_of(algebra);
    const HookPartition lam = partition_of(partition, alg);
    const CharacterOptions opt = options(threads, weyl_sum);
    py::gil_scoped_release release;
    return to_json(kw_character(lam, alg, minus, opt)).dump();
  }, py::arg("algebra"), py::arg("partition"), py::arg("minus") = false, py::arg("threads") = 1,
     py::arg("weyl_sum") = "orbit");

  m.def("bottom", [](const std::string& algebra, const std::string& partition) {
    const Algebra alg = algebra_of(algebra);
    return to_json(bottom_of_block(partition_of(partition, alg), alg), alg).dump();
  }, py::arg("algebra"), py::arg("partition"));

  m.def("block_family", [](const std::string& algebra, const std::string& partition) {
    const Algebra alg = algebra_of(algebra);
    return to_json(lambda_x_family(partition_of(partition, alg), alg), alg).dump();
  }, py::arg("algebra"), py::arg("partition"));

  m.def("atypicality", [](const std::string& algebra, const std::string& partition, bool minus) {
    const Algebra alg = algebra_of(algebra);
    return atypicality_degree(shifted_natural(partition_of(partition, alg), alg, minus), alg);
  }, py::arg("algebra"), py::arg("partition"), py::arg("minus") = false);

  m.def("run", [](std::vector<std::string> args) {
    args.insert(args.begin(), "ospkw");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    const Response r = run_command_line(static_cast<int>(argv.size()), argv.data());
    return py::make_tuple(r.exit_code, r.payload);
  }, py::arg("args"), "Runs the command-line front end; returns (exit code, payload).");
}
