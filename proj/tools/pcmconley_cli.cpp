#include "pcmconley/examples.hpp"
#include "pcmconley/mapfile.hpp"
#include "pcmconley/report.hpp"
#include "pcmconley/version.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace pcmconley;
using nlohmann::ordered_json;

namespace {

// Certified maps to 0, Violated to 2, anything undecided to 3; 1 is reserved
// for usage and input errors.
int exit_for(Status s) {
    switch (s) {
        case Status::Certified: return 0;
        case Status::Violated: return 2;
        default: return 3;
    }
}

Interval parse_neighborhood(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("neighborhood must be \"lo,hi\"");
    return Interval(Rational::parse(text.substr(0, comma)),
                    Rational::parse(text.substr(comma + 1)));
}

PCMap load_valid_map(const std::string& path) {
    PCMap f = load_mapfile(path);
    const ValidationReport v = f.validate();
    if (!v.ok()) {
        for (const std::string& e : v.errors) std::cerr << "error: " << e << "\n";
        throw std::invalid_argument("map file '" + path + "' does not define a valid map");
    }
    return f;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << content;
}

std::string selector_str(const AdjointSelector& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& [x, piece] : s) {
        out += (first ? "" : ", ") + x.str() + "->" + std::to_string(piece);
        first = false;
    }
    return out + "}";
}

ordered_json selector_json(const AdjointSelector& s) {
    ordered_json out = ordered_json::array();
    for (const auto& [x, piece] : s)
        out.push_back(ordered_json{{"point", x.str()}, {"piece", piece}});
    return out;
}

ordered_json rational_list(const std::vector<Rational>& xs) {
    ordered_json out = ordered_json::array();
    for (const Rational& x : xs) out.push_back(x.str());
    return out;
}

void print_map_header(const PCMap& f) {
    std::cout << "map: " << (f.name.empty() ? "(unnamed)" : f.name) << ", space "
              << f.space.str() << ", " << f.pieces.size() << " pieces\n";
}

int run_validate(const std::string& path, const std::string& format) {
    PCMap f;
    try {
        f = load_mapfile(path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    const ValidationReport v = f.validate();
    if (format == "json") {
        ordered_json j;
        j["schema_version"] = 1;
        j["map"] = mapfile_json(f);
        j["ok"] = v.ok();
        j["errors"] = v.errors;
        j["warnings"] = v.warnings;
        std::cout << j.dump(2) << "\n";
    } else {
        print_map_header(f);
        for (const std::string& e : v.errors) std::cout << "error: " << e << "\n";
        for (const std::string& w : v.warnings) std::cout << "warning: " << w << "\n";
        std::cout << (v.ok() ? "ok" : "invalid") << "\n";
    }
    return v.ok() ? 0 : 1;
}

int run_partition(const PCMap& f, const std::string& format) {
    const PartitionResult pr = minimal_partition(f);
    if (format == "json") {
        ordered_json j;
        j["schema_version"] = 1;
        j["pieces_before"] = f.pieces.size();
        j["map"] = mapfile_json(pr.map);
        j["kinks"] = rational_list(pr.kinks);
        std::cout << j.dump(2) << "\n";
    } else {
        print_map_header(f);
        std::cout << "minimal partition: " << pr.map.pieces.size() << " pieces\n";
        for (const Piece& p : pr.map.pieces)
            std::cout << "  " << (p.lo_closed ? "[" : "(") << p.domain.lo.str() << ","
                      << p.domain.hi.str() << (p.hi_closed ? "]" : ")") << "  x -> "
                      << p.a.str() << "*x + " << p.b.str() << "\n";
        std::cout << "kinks:";
        if (pr.kinks.empty()) std::cout << " none";
        for (const Rational& x : pr.kinks) std::cout << " " << x.str();
        std::cout << "\n";
    }
    return 0;
}

int run_adjoints(const PCMap& f, const std::string& format) {
    const std::vector<Rational> D = f.discontinuity_set();
    const auto selectors = f.list_adjoints();
    if (format == "json") {
        ordered_json j;
        j["schema_version"] = 1;
        j["discontinuities"] = rational_list(D);
        j["count"] = f.adjoint_count().str();
        j["selectors"] = ordered_json::array();
        for (const AdjointSelector& s : selectors) j["selectors"].push_back(selector_json(s));
        std::cout << j.dump(2) << "\n";
    } else {
        print_map_header(f);
        std::cout << "discontinuity set:";
        if (D.empty()) std::cout << " empty";
        for (const Rational& x : D) std::cout << " " << x.str();
        std::cout << "\n";
        std::cout << "adjoint maps: " << f.adjoint_count() << "\n";
        for (const AdjointSelector& s : selectors) std::cout << "  " << selector_str(s) << "\n";
    }
    return 0;
}

int run_code(const PCMap& f, const Rational& x, unsigned depth, const std::string& format) {
    Word w;
    try {
        w = code(f, x, depth);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    if (format == "json") {
        ordered_json j;
        j["schema_version"] = 1;
        j["point"] = x.str();
        j["symbols"] = w;
        std::cout << j.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < w.size(); ++i)
            std::cout << (i ? "," : "") << w[i];
        std::cout << "\n";
    }
    return 0;
}

struct IsolateRound {
    LiftedSystem sys;
    InvariantSets inv;
    IsolationResult iso;
    CompatibilityResult comp;
    Status status = Status::Unknown;
};

// isolate decides only the neighborhood questions, so it runs its own
// refinement loop instead of the full pipeline.
int run_isolate(const PCMap& f, const Interval& N, const Options& opt, const std::string& format,
                const std::string& dot_path) {
    std::vector<IsolateRound> rounds;
    Status status = Status::Unknown;
    for (unsigned i = 0; i <= opt.max_refinements; ++i) {
        IsolateRound r{build_lifted_system(
                           f, GridSpec{N, opt.grid_depth + i, opt.code_depth + i}),
                       {}, {}, {}, Status::Unknown};
        r.inv = coding_invariant_sets(r.sys);
        r.iso = is_isolating(r.sys, r.inv, opt.strict_isolation);
        r.comp = is_compatible(r.sys, r.inv, opt.backward_bound);
        if (r.iso.status == Status::Violated || r.comp.status == Status::Violated)
            r.status = Status::Violated;
        else if (r.iso.status == Status::Certified && r.comp.status == Status::Certified)
            r.status = Status::Certified;
        rounds.push_back(std::move(r));
        status = rounds.back().status;
        if (status == Status::Certified || status == Status::Violated) break;
    }

    if (!dot_path.empty())
        write_file(dot_path, to_dot(rounds.back().sys, rounds.back().inv.both));

    if (format == "json") {
        ordered_json j;
        j["schema_version"] = 1;
        j["map"] = mapfile_json(f);
        j["neighborhood"] = {{"lo", N.lo.str()}, {"hi", N.hi.str()}};
        j["status"] = status_str(status);
        j["rounds"] = ordered_json::array();
        for (const IsolateRound& r : rounds) {
            ordered_json rj;
            rj["grid_depth"] = r.sys.spec.grid_depth;
            rj["code_depth"] = r.sys.spec.code_depth;
            ordered_json iso;
            iso["status"] = status_str(r.iso.status);
            iso["touched"] = rational_list(r.iso.touched);
            if (!r.iso.witness_orbit.empty())
                iso["witness_orbit"] = rational_list(r.iso.witness_orbit);
            if (!r.iso.detail.empty()) iso["detail"] = r.iso.detail;
            rj["isolation"] = std::move(iso);
            ordered_json comp;
            comp["status"] = status_str(r.comp.status);
            comp["boundary_points"] = rational_list(r.comp.boundary_points);
            comp["tier1"] = r.comp.tier1;
            if (!r.comp.tier1_failures.empty())
                comp["tier1_failures"] = rational_list(r.comp.tier1_failures);
            comp["adjoints"] = ordered_json::array();
            for (const AdjointFinding& a : r.comp.details) {
                ordered_json aj;
                aj["selector"] = selector_json(a.selector);
                aj["status"] = status_str(a.status);
                if (!a.orbit.empty()) aj["orbit"] = rational_list(a.orbit);
                comp["adjoints"].push_back(std::move(aj));
            }
            if (!r.comp.detail.empty()) comp["detail"] = r.comp.detail;
            rj["compatibility"] = std::move(comp);
            rj["status"] = status_str(r.status);
            j["rounds"].push_back(std::move(rj));
        }
        std::cout << j.dump(2) << "\n";
    } else {
        print_map_header(f);
        std::cout << "neighborhood: " << N.str() << "\n";
        for (std::size_t i = 0; i < rounds.size(); ++i) {
            const IsolateRound& r = rounds[i];
            std::cout << "round " << i << ": grid depth " << r.sys.spec.grid_depth
                      << ", code depth " << r.sys.spec.code_depth << "\n";
            std::cout << "  invariant part: " << r.inv.both.size() << " vertices, projection";
            const auto proj = r.sys.project(r.inv.both);
            if (proj.empty()) std::cout << " empty";
            for (const Interval& iv : proj) std::cout << " " << iv.str();
            std::cout << "\n";
            std::cout << "  isolation: " << status_str(r.iso.status);
            if (!r.iso.detail.empty()) std::cout << " (" << r.iso.detail << ")";
            std::cout << "\n";
            if (!r.iso.witness_orbit.empty()) {
                std::cout << "    witness orbit:";
                for (const Rational& x : r.iso.witness_orbit) std::cout << " " << x.str();
                std::cout << "\n";
            }
            std::cout << "  compatibility: " << status_str(r.comp.status)
                      << (r.comp.tier1 ? " (digraph certificate)" : "");
            if (!r.comp.detail.empty()) std::cout << " (" << r.comp.detail << ")";
            std::cout << "\n";
            for (const AdjointFinding& a : r.comp.details) {
                std::cout << "    adjoint " << selector_str(a.selector) << ": "
                          << status_str(a.status);
                if (!a.orbit.empty()) {
                    std::cout << ", backward orbit";
                    for (const Rational& x : a.orbit) std::cout << " " << x.str();
                }
                std::cout << "\n";
            }
        }
        std::cout << "status: " << status_str(status) << "\n";
    }
    return exit_for(status);
}

int run_index(const PCMap& f, const Interval& N, const Options& opt, const std::string& format,
              const std::string& dot_path) {
    const PipelineResult res = run_pipeline(f, N, opt);
    if (!dot_path.empty())
        write_file(dot_path, to_dot(res.final_stage().sys, res.final_stage().inv.both));
    if (format == "json")
        std::cout << report_json(res).dump(2) << "\n";
    else
        std::cout << report_text(res);
    return exit_for(res.status);
}

int run_wazewski(const PCMap& f, const Interval& N, const Options& opt,
                 const std::string& format, const std::string& dot_path) {
    const WazewskiCheck check = check_wazewski(f, N, opt);
    if (!dot_path.empty())
        write_file(dot_path, to_dot(check.pipeline.final_stage().sys,
                                    check.pipeline.final_stage().inv.both));
    if (format == "json")
        std::cout << report_json(check).dump(2) << "\n";
    else
        std::cout << report_text(check);
    // A certified nontrivial index without a confirming orbit is reported,
    // but cannot count as a settled verdict.
    if (check.pipeline.status == Status::Certified && !check.conclusion_holds) return 3;
    return exit_for(check.pipeline.status);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conley index computations for piecewise continuous interval maps"};
    app.set_version_flag("--version", std::string(version()));
    app.require_subcommand(1);

    std::string map_path;
    std::string neighborhood;
    std::string point;
    std::string format = "text";
    std::string dot_path;
    Options opt;
    bool strict = false;

    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json"}));
    };
    const auto add_params = [&](CLI::App* sub) {
        sub->add_option("--grid-depth", opt.grid_depth, "Cells per segment as a power of two");
        sub->add_option("--code-depth", opt.code_depth, "Itinerary word length")
            ->check(CLI::PositiveNumber);
        sub->add_option("--max-period", opt.max_period, "Periodic witness search bound");
        sub->add_option("--backward-bound", opt.backward_bound,
                        "Backward orbit depth for compatibility");
        sub->add_option("--max-refinements", opt.max_refinements,
                        "Extra rounds at increased depth");
        sub->add_flag("--strict-isolation", strict,
                      "Also require empty cells next to the neighborhood endpoints");
        sub->add_option("--emit-dot", dot_path, "Write the final lifted digraph to a DOT file");
    };

    CLI::App* validate = app.add_subcommand("validate", "Check a map file");
    validate->add_option("mapfile", map_path, "Map definition file")->required();
    add_format(validate);

    CLI::App* partition = app.add_subcommand("partition", "Minimal partition of a map");
    partition->add_option("mapfile", map_path, "Map definition file")->required();
    add_format(partition);

    CLI::App* adjoints = app.add_subcommand("adjoints", "Breakpoints and adjoint maps");
    adjoints->add_option("mapfile", map_path, "Map definition file")->required();
    add_format(adjoints);

    CLI::App* code_cmd = app.add_subcommand("code", "Itinerary of a point");
    code_cmd->add_option("mapfile", map_path, "Map definition file")->required();
    code_cmd->add_option("--point", point, "Starting point as p/q")->required();
    code_cmd->add_option("--code-depth", opt.code_depth, "Itinerary word length")
        ->check(CLI::PositiveNumber);
    add_format(code_cmd);

    CLI::App* isolate = app.add_subcommand("isolate", "Isolation and compatibility of N");
    isolate->add_option("mapfile", map_path, "Map definition file")->required();
    isolate->add_option("--neighborhood", neighborhood, "Neighborhood as lo,hi")->required();
    add_params(isolate);
    add_format(isolate);

    CLI::App* index = app.add_subcommand("index", "Conley index over N");
    index->add_option("mapfile", map_path, "Map definition file")->required();
    index->add_option("--neighborhood", neighborhood, "Neighborhood as lo,hi")->required();
    add_params(index);
    add_format(index);

    CLI::App* wazewski =
        app.add_subcommand("wazewski", "Index plus periodic orbit confirmation");
    wazewski->add_option("mapfile", map_path, "Map definition file")->required();
    wazewski->add_option("--neighborhood", neighborhood, "Neighborhood as lo,hi")->required();
    add_params(wazewski);
    add_format(wazewski);

    CLI::App* paper = app.add_subcommand(
        "paper-example", "Built-in worked example on its reference neighborhood");
    paper->add_option("--neighborhood", neighborhood, "Neighborhood as lo,hi");
    add_params(paper);
    add_format(paper);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    opt.strict_isolation = strict;

    try {
        if (validate->parsed()) return run_validate(map_path, format);

        if (paper->parsed()) {
            const PCMap f = examples::worked_example();
            const Interval N = neighborhood.empty() ? Interval(Rational(-1, 3), Rational(4, 3))
                                                    : parse_neighborhood(neighborhood);
            return run_wazewski(f, N, opt, format, dot_path);
        }

        const PCMap f = load_valid_map(map_path);
        if (partition->parsed()) return run_partition(f, format);
        if (adjoints->parsed()) return run_adjoints(f, format);
        if (code_cmd->parsed()) return run_code(f, Rational::parse(point), opt.code_depth, format);

        const Interval N = parse_neighborhood(neighborhood);
        if (isolate->parsed()) return run_isolate(f, N, opt, format, dot_path);
        if (index->parsed()) return run_index(f, N, opt, format, dot_path);
        if (wazewski->parsed()) return run_wazewski(f, N, opt, format, dot_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
