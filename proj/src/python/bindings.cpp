// Python bindings. Document-shaped results cross the boundary as JSON text
// (the package wrapper parses them); scalar queries return plain values.

#include <pybind11/pybind11.h>

#include <memory>
#include <string>

#include "circlepaint/core.hpp"
#include "circlepaint/dominance.hpp"
#include "circlepaint/errors.hpp"
#include "circlepaint/json_io.hpp"
#include "circlepaint/lowerbound.hpp"
#include "circlepaint/oracle.hpp"
#include "circlepaint/solver.hpp"

namespace py = pybind11;
namespace cp = circlepaint;

namespace {

std::shared_ptr<const cp::IntervalSystem> parse_system(const std::string& text) {
    return std::make_shared<const cp::IntervalSystem>(cp::load_system_json(text));
}

}  // namespace

PYBIND11_MODULE(_circlepaint, m) {
    m.doc() = "colour circle graphs given as interval overlap systems";

    // Specific translators are consulted before general ones (LIFO), so the
    // catch-all base goes first.
    py::register_exception<cp::Error>(m, "CirclePaintError", PyExc_RuntimeError);
    py::register_exception<cp::InvalidInput>(m, "InvalidInput", PyExc_ValueError);

    m.def(
        "color",
        [](const std::string& system_json, bool assert_bounds) {
            auto sys = parse_system(system_json);
            const cp::ColouringResult res = cp::colour(
                sys, cp::SolveOptions{.paranoid = assert_bounds});
            return cp::colouring_json(*sys, res, /*with_stats=*/true);
        },
        py::arg("system_json"), py::arg("assert_bounds") = false,
        "Colour the system; returns the colouring document as JSON text.");

    m.def(
        "omega",
        [](const std::string& system_json) {
            return cp::omega(*parse_system(system_json)).omega;
        },
        py::arg("system_json"), "Clique number of the overlap graph.");

    m.def(
        "verify",
        [](const std::string& system_json, const std::string& colors_json) {
            auto sys = parse_system(system_json);
            return cp::verify_colouring(
                       *sys, cp::load_colours_json(*sys, colors_json))
                .ok();
        },
        py::arg("system_json"), py::arg("colors_json"),
        "True iff the colouring is complete and proper.");

    m.def(
        "exact_chi",
        [](const std::string& system_json, long long budget) {
            auto sys = parse_system(system_json);
            return cp::exact_chi(cp::overlap_graph(*sys), budget,
                                 cp::omega(*sys).omega);
        },
        py::arg("system_json"), py::arg("budget") = 10'000'000,
        "Exact chromatic number by branch and bound; raises CirclePaintError "
        "when the node budget runs out.");

    m.def(
        "gen_lower",
        [](int n, int omega, bool verify, long long brute_limit) {
            std::string out = "{\"diagram\": " +
                              cp::save_diagram_json(cp::lower_bound_diagram(
                                  n, omega));
            if (verify) {
                out += ", \"report\": " + cp::report_json(
                                              cp::verify_lower_bound_instance(
                                                  n, omega, brute_limit));
            }
            return out + "}";
        },
        py::arg("n"), py::arg("omega"), py::arg("verify") = false,
        py::arg("brute_limit") = 64,
        "Chord diagram whose chromatic number far exceeds its clique number, "
        "as JSON text; with verify=true the structural claims are checked.");

    m.def(
        "gen_random",
        [](int m_intervals, std::uint64_t seed) {
            return cp::save_system_json(cp::random_system(m_intervals, seed));
        },
        py::arg("m"), py::arg("seed") = 1,
        "Uniformly random interval system as JSON text; deterministic per "
        "seed.");

    m.def("color_bound", &cp::colour_bound, py::arg("omega"),
          "Colour budget guaranteed by the solver for a given clique number.");
}
