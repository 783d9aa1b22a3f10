// Python bindings. Every function returns the JSON report as a string; the package decodes it.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gl2dist/acceptance.hpp"
#include "gl2dist/commands.hpp"
#include "gl2dist/errors.hpp"

namespace py = pybind11;
using namespace gl2dist;

namespace {

RunConfig make_config(std::optional<int> p, int precision, int max_denominator, std::uint64_t seed) {
    RunConfig c;
    c.prime = p;
    c.precision = precision;
    c.max_denominator = max_denominator;
    c.seed = seed;
    return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "gl2dist core";

    auto& math_error = py::register_exception<MathError>(m, "MathError", PyExc_ValueError);
    py::register_exception<PrecisionUnderflow>(m, "PrecisionUnderflow", math_error.ptr());
    py::register_exception<RegimeRefusal>(m, "RegimeRefusal", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def(
        "classify",
        [](const std::string& spec, std::optional<int> p, int precision) {
            return cmd_classify(spec, make_config(p, precision, 8, 1)).dump();
        },
        py::arg("spec"), py::arg("p") = py::none(), py::arg("precision") = 24);
    m.def(
        "decide",
        [](const std::string& spec, const std::string& omega, std::optional<int> p, int precision) {
            return cmd_decide(spec, omega, make_config(p, precision, 8, 1)).dump();
        },
        py::arg("spec"), py::arg("omega"), py::arg("p") = py::none(), py::arg("precision") = 24);
    m.def(
        "enumerate",
        [](const std::string& spec, bool regular_only, std::optional<int> p, int max_denominator, int precision) {
            return cmd_enumerate(spec, regular_only, make_config(p, precision, max_denominator, 1)).dump();
        },
        py::arg("spec"), py::arg("regular_only") = false, py::arg("p") = py::none(), py::arg("max_denominator") = 8,
        py::arg("precision") = 24);
    m.def(
        "epsilon",
        [](const std::string& spec, const std::string& chi, std::optional<std::string> pair, bool gauss, std::optional<int> p,
           int precision) { return cmd_epsilon(spec, chi, pair, gauss, make_config(p, precision, 8, 1)).dump(); },
        py::arg("spec"), py::arg("chi"), py::arg("pair") = py::none(), py::arg("gauss") = false, py::arg("p") = py::none(),
        py::arg("precision") = 24);
    m.def(
        "hakim",
        [](const std::string& spec, const std::string& omega, std::optional<int> p, int max_denominator, int precision) {
            return cmd_hakim(spec, omega, make_config(p, precision, max_denominator, 1)).dump();
        },
        py::arg("spec"), py::arg("omega"), py::arg("p") = py::none(), py::arg("max_denominator") = 8, py::arg("precision") = 24);
    m.def(
        "verify_paper",
        [](std::optional<int> p, int max_denominator, int precision, std::uint64_t seed, std::optional<int> only) {
            const RunConfig rc = make_config(p, precision, max_denominator, seed);
            validate(rc);
            acceptance::Config c;
            c.prime = p;
            c.max_denominator = max_denominator;
            c.precision = precision;
            c.seed = seed;
            std::vector<acceptance::Result> results;
            {
                py::gil_scoped_release release;
                if (only) {
                    results.push_back(acceptance::run_one(*only, c));
                } else {
                    results = acceptance::run_all(c);
                }
            }
            return acceptance::to_json(results).dump();
        },
        py::arg("p") = py::none(), py::arg("max_denominator") = 8, py::arg("precision") = 24, py::arg("seed") = 1,
        py::arg("only") = py::none());
}
