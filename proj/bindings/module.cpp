// Python face of the library. Scalar arguments are exact "p/q" strings and
// structured results come back as JSON report strings, so no rational or
// matrix types cross the language boundary.
#include "pcmconley/coding.hpp"
#include "pcmconley/examples.hpp"
#include "pcmconley/mapfile.hpp"
#include "pcmconley/pipeline.hpp"
#include "pcmconley/report.hpp"
#include "pcmconley/version.hpp"
#include "pcmconley/wazewski.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pcmconley;

namespace {

PCMap map_from_arg(const std::string& mapfile) { return parse_mapfile(mapfile); }

PCMap example_by_name(const std::string& name) {
    for (const PCMap& f : {examples::worked_example(), examples::identity_contraction(),
                           examples::split_contraction(), examples::linear_attractor(),
                           examples::linear_repeller()})
        if (f.name == name) return f;
    throw std::invalid_argument("unknown example '" + name + "'");
}

Options make_options(unsigned grid_depth, unsigned code_depth, std::size_t max_period,
                     unsigned backward_bound, unsigned max_refinements, bool strict_isolation,
                     bool allow_adjoint_witness) {
    Options opt;
    opt.grid_depth = grid_depth;
    opt.code_depth = code_depth;
    opt.max_period = max_period;
    opt.backward_bound = backward_bound;
    opt.max_refinements = max_refinements;
    opt.strict_isolation = strict_isolation;
    opt.allow_adjoint_witness = allow_adjoint_witness;
    return opt;
}

}  // namespace

PYBIND11_MODULE(pcmconley, m) {
    m.doc() = "Conley index computations for piecewise continuous interval maps";

    m.def("version", [] { return std::string(version()); });

    m.def("example_names", [] {
        return std::vector<std::string>{"worked-example", "identity-contraction",
                                        "split-contraction", "linear-attractor",
                                        "linear-repeller"};
    });
    m.def(
        "example", [](const std::string& name) { return mapfile_json(example_by_name(name)).dump(); },
        py::arg("name"), "Map definition JSON for a built-in example");

    m.def(
        "validate",
        [](const std::string& mapfile) {
            const ValidationReport v = map_from_arg(mapfile).validate();
            nlohmann::ordered_json j;
            j["ok"] = v.ok();
            j["errors"] = v.errors;
            j["warnings"] = v.warnings;
            return j.dump();
        },
        py::arg("mapfile"), "Validation verdict for a map definition, as JSON");

    m.def(
        "evaluate",
        [](const std::string& mapfile, const std::string& x) {
            return map_from_arg(mapfile).eval(Rational::parse(x)).str();
        },
        py::arg("mapfile"), py::arg("x"), "Exact image of a rational point");

    m.def(
        "itinerary",
        [](const std::string& mapfile, const std::string& x, std::size_t depth) {
            return code(map_from_arg(mapfile), Rational::parse(x), depth);
        },
        py::arg("mapfile"), py::arg("x"), py::arg("depth") = 8,
        "Piece symbols visited by the forward orbit");

    m.def(
        "compute_index",
        [](const std::string& mapfile, const std::string& lo, const std::string& hi,
           unsigned grid_depth, unsigned code_depth, std::size_t max_period,
           unsigned backward_bound, unsigned max_refinements, bool strict_isolation,
           bool allow_adjoint_witness) {
            const auto res = run_pipeline(
                map_from_arg(mapfile), Interval(Rational::parse(lo), Rational::parse(hi)),
                make_options(grid_depth, code_depth, max_period, backward_bound, max_refinements,
                             strict_isolation, allow_adjoint_witness));
            return report_json(res).dump();
        },
        py::arg("mapfile"), py::arg("lo"), py::arg("hi"), py::arg("grid_depth") = 4,
        py::arg("code_depth") = 3, py::arg("max_period") = 6, py::arg("backward_bound") = 12,
        py::arg("max_refinements") = 2, py::arg("strict_isolation") = false,
        py::arg("allow_adjoint_witness") = true,
        "Full pipeline report over the neighborhood [lo, hi], as JSON");

    m.def(
        "check_orbit_conclusion",
        [](const std::string& mapfile, const std::string& lo, const std::string& hi,
           unsigned grid_depth, unsigned code_depth, std::size_t max_period,
           unsigned backward_bound, unsigned max_refinements, bool strict_isolation,
           bool allow_adjoint_witness) {
            const auto res = check_wazewski(
                map_from_arg(mapfile), Interval(Rational::parse(lo), Rational::parse(hi)),
                make_options(grid_depth, code_depth, max_period, backward_bound, max_refinements,
                             strict_isolation, allow_adjoint_witness));
            return report_json(res).dump();
        },
        py::arg("mapfile"), py::arg("lo"), py::arg("hi"), py::arg("grid_depth") = 4,
        py::arg("code_depth") = 3, py::arg("max_period") = 6, py::arg("backward_bound") = 12,
        py::arg("max_refinements") = 2, py::arg("strict_isolation") = false,
        py::arg("allow_adjoint_witness") = true,
        "Index plus periodic-witness report over [lo, hi], as JSON");
}
