#include "pcmconley/report.hpp"

#include "pcmconley/mapfile.hpp"

#include <limits>
#include <sstream>

namespace pcmconley {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json interval_json(const Interval& iv) {
    return {{"lo", iv.lo.str()}, {"hi", iv.hi.str()}};
}

ordered_json rational_list(const std::vector<Rational>& xs) {
    ordered_json out = ordered_json::array();
    for (const Rational& x : xs) out.push_back(x.str());
    return out;
}

ordered_json matrix_json(const ZMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const BigInt& v = m.at(i, j);
            if (v >= std::numeric_limits<long long>::min() &&
                v <= std::numeric_limits<long long>::max())
                row.push_back(v.convert_to<long long>());
            else
                row.push_back(v.str());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json leray_json(const LerayReduction& red) {
    ordered_json j;
    j["rank"] = red.rank;
    j["trivial"] = red.trivial();
    j["reduced"] = matrix_json(red.L);
    j["char_poly"] = red.char_l.str();
    return j;
}

ordered_json stage_json(const Stage& st) {
    ordered_json j;
    j["grid_depth"] = st.sys.spec.grid_depth;
    j["code_depth"] = st.sys.spec.code_depth;

    std::size_t solid = 0;
    std::size_t edges = 0;
    for (const LiftedVertex& v : st.sys.vertices) solid += v.solid() ? 1 : 0;
    for (const auto& s : st.sys.succ) edges += s.size();
    j["digraph"] = {{"cells", st.sys.cells.size()},
                    {"vertices", st.sys.vertices.size()},
                    {"solid_vertices", solid},
                    {"edges", edges}};

    ordered_json inv;
    inv["vertices"] = st.inv.both.size();
    inv["projection"] = ordered_json::array();
    for (const Interval& iv : st.sys.project(st.inv.both))
        inv["projection"].push_back(interval_json(iv));
    j["invariant"] = std::move(inv);

    ordered_json iso;
    iso["status"] = status_str(st.isolation.status);
    iso["touched"] = rational_list(st.isolation.touched);
    if (!st.isolation.witness_orbit.empty())
        iso["witness_orbit"] = rational_list(st.isolation.witness_orbit);
    if (!st.isolation.detail.empty()) iso["detail"] = st.isolation.detail;
    j["isolation"] = std::move(iso);

    ordered_json comp;
    comp["status"] = status_str(st.compatibility.status);
    comp["boundary_points"] = rational_list(st.compatibility.boundary_points);
    comp["tier1"] = st.compatibility.tier1;
    if (!st.compatibility.tier1_failures.empty())
        comp["tier1_failures"] = rational_list(st.compatibility.tier1_failures);
    if (!st.compatibility.detail.empty()) comp["detail"] = st.compatibility.detail;
    j["compatibility"] = std::move(comp);

    ordered_json pair;
    pair["status"] = status_str(st.pair.status);
    pair["exit_vertices"] = st.pair.exits.size();
    pair["p0_vertices"] = st.pair.p0.size();
    if (!st.pair.failures.empty()) pair["failures"] = st.pair.failures;
    j["index_pair"] = std::move(pair);

    if (st.homology) {
        ordered_json hom;
        hom["betti0"] = st.homology->betti0;
        hom["betti1"] = st.homology->betti1;
        hom["components"] = ordered_json::array();
        for (std::size_t r : st.homology->h0_gens) {
            ordered_json c;
            c["support"] = interval_json(st.homology->runs[r].support);
            c["word"] = word_str(st.homology->runs[r].word);
            hom["components"].push_back(std::move(c));
        }
        hom["loops"] = ordered_json::array();
        for (const Loop& loop : st.homology->h1_gens) {
            ordered_json c;
            c["support"] = interval_json(loop.support);
            c["word"] = word_str(st.homology->runs[loop.run].word);
            hom["loops"].push_back(std::move(c));
        }
        j["homology"] = std::move(hom);
    }
    if (st.maps) {
        ordered_json maps;
        maps["status"] = status_str(st.maps->status);
        maps["h0"] = matrix_json(st.maps->h0);
        maps["h1"] = matrix_json(st.maps->h1);
        if (!st.maps->issues.empty()) maps["issues"] = st.maps->issues;
        j["maps"] = std::move(maps);
    }
    if (st.index_h0 && st.index_h1) {
        ordered_json idx;
        idx["h0"] = leray_json(*st.index_h0);
        idx["h1"] = leray_json(*st.index_h1);
        idx["nontrivial"] = !st.index_h0->trivial() || !st.index_h1->trivial();
        j["index"] = std::move(idx);
    }
    j["status"] = status_str(st.status);
    return j;
}

ordered_json witness_json(const WitnessSearch& ws) {
    ordered_json j;
    j["found"] = ws.found();
    j["max_period_searched"] = ws.max_period_searched;
    if (ws.witness) {
        const PeriodicWitness& w = *ws.witness;
        ordered_json wj;
        wj["period"] = w.period;
        wj["word"] = word_str(w.word);
        wj["orbit"] = rational_list(w.orbit);
        wj["uses_adjoint"] = w.uses_adjoint();
        if (!w.selector.empty()) {
            ordered_json sel = ordered_json::array();
            for (const auto& [x, piece] : w.selector)
                sel.push_back(ordered_json{{"point", x.str()}, {"piece", piece}});
            wj["selector"] = std::move(sel);
        }
        if (w.fixed_interval) wj["fixed_interval"] = interval_json(*w.fixed_interval);
        j["witness"] = std::move(wj);
    }
    return j;
}

}  // namespace

ordered_json report_json(const PipelineResult& r) {
    ordered_json j;
    j["schema_version"] = 1;
    j["map"] = mapfile_json(r.map);
    j["neighborhood"] = interval_json(r.N);
    j["options"] = {{"grid_depth", r.options.grid_depth},
                    {"code_depth", r.options.code_depth},
                    {"max_period", r.options.max_period},
                    {"backward_bound", r.options.backward_bound},
                    {"max_refinements", r.options.max_refinements},
                    {"strict_isolation", r.options.strict_isolation},
                    {"allow_adjoint_witness", r.options.allow_adjoint_witness}};
    j["status"] = status_str(r.status);
    j["nontrivial"] = r.nontrivial;
    j["rounds"] = ordered_json::array();
    for (const Stage& st : r.stages) j["rounds"].push_back(stage_json(st));
    return j;
}

ordered_json report_json(const WazewskiCheck& c) {
    ordered_json j;
    j["schema_version"] = 1;
    j["analysis"] = report_json(c.pipeline);
    j["witness_search"] = {{"map_only", witness_json(c.map_only)},
                           {"with_adjoints", witness_json(c.with_adjoints)}};
    j["nontrivial"] = c.nontrivial;
    j["conclusion_holds"] = c.conclusion_holds;
    return j;
}

namespace {

std::string matrix_line(const ZMatrix& m) {
    return m.rows() == 0 || m.cols() == 0 ? "[]" : m.str();
}

void stage_text(std::ostream& os, const Stage& st, std::size_t round) {
    os << "round " << round << ": grid depth " << st.sys.spec.grid_depth << ", code depth "
       << st.sys.spec.code_depth << "\n";
    std::size_t solid = 0;
    for (const LiftedVertex& v : st.sys.vertices) solid += v.solid() ? 1 : 0;
    os << "  digraph: " << st.sys.cells.size() << " cells, " << st.sys.vertices.size()
       << " vertices (" << solid << " solid)\n";
    os << "  invariant part: " << st.inv.both.size() << " vertices, projection";
    const auto proj = st.sys.project(st.inv.both);
    if (proj.empty()) os << " empty";
    for (const Interval& iv : proj) os << " " << iv.str();
    os << "\n";
    os << "  isolation: " << status_str(st.isolation.status);
    if (!st.isolation.detail.empty()) os << " (" << st.isolation.detail << ")";
    os << "\n";
    os << "  compatibility: " << status_str(st.compatibility.status)
       << (st.compatibility.tier1 ? " (digraph certificate)" : "");
    if (!st.compatibility.detail.empty()) os << " (" << st.compatibility.detail << ")";
    os << "\n";
    os << "  index pair: " << status_str(st.pair.status) << ", " << st.pair.exits.size()
       << " exit vertices, p0 size " << st.pair.p0.size() << "\n";
    if (st.homology)
        os << "  homology: betti0 " << st.homology->betti0 << ", betti1 " << st.homology->betti1
           << "\n";
    if (st.maps)
        os << "  induced maps: " << status_str(st.maps->status) << ", h0 "
           << matrix_line(st.maps->h0) << ", h1 " << matrix_line(st.maps->h1) << "\n";
    if (st.index_h0 && st.index_h1) {
        os << "  index: h0 ";
        if (st.index_h0->trivial())
            os << "trivial";
        else
            os << "rank " << st.index_h0->rank << " char " << st.index_h0->char_l.str();
        os << "; h1 ";
        if (st.index_h1->trivial())
            os << "trivial";
        else
            os << "rank " << st.index_h1->rank << " char " << st.index_h1->char_l.str();
        os << "\n";
    }
    os << "  round status: " << status_str(st.status) << "\n";
}

void witness_text(std::ostream& os, const char* label, const WitnessSearch& ws) {
    os << label << ": ";
    if (!ws.found()) {
        os << "no periodic orbit up to period " << ws.max_period_searched << "\n";
        return;
    }
    const PeriodicWitness& w = *ws.witness;
    os << "period " << w.period << " orbit (";
    for (std::size_t i = 0; i < w.orbit.size(); ++i)
        os << (i ? "," : "") << w.orbit[i].str();
    os << ") word " << word_str(w.word);
    if (w.uses_adjoint()) {
        os << " via adjoint {";
        bool first = true;
        for (const auto& [x, piece] : w.selector) {
            os << (first ? "" : ", ") << x.str() << "->" << piece;
            first = false;
        }
        os << "}";
    }
    if (w.fixed_interval) os << ", fixed on " << w.fixed_interval->str();
    os << "\n";
}

}  // namespace

std::string report_text(const PipelineResult& r) {
    std::ostringstream os;
    os << "map: " << (r.map.name.empty() ? "(unnamed)" : r.map.name) << ", space "
       << r.map.space.str() << ", " << r.map.pieces.size() << " pieces\n";
    os << "neighborhood: " << r.N.str() << "\n";
    for (std::size_t i = 0; i < r.stages.size(); ++i) stage_text(os, r.stages[i], i);
    os << "status: " << status_str(r.status) << (r.nontrivial ? " (nontrivial index)" : "")
       << "\n";
    return os.str();
}

std::string report_text(const WazewskiCheck& c) {
    std::ostringstream os;
    os << report_text(c.pipeline);
    witness_text(os, "map orbit search", c.map_only);
    witness_text(os, "adjoint orbit search", c.with_adjoints);
    os << "nontrivial index: " << (c.nontrivial ? "yes" : "no") << "\n";
    os << "periodic orbit conclusion: " << (c.conclusion_holds ? "holds" : "not established")
       << "\n";
    return os.str();
}

}  // namespace pcmconley
