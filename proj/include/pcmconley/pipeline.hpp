#pragma once

#include "pcmconley/homology.hpp"
#include "pcmconley/szymczak.hpp"
#include "pcmconley/wazewski.hpp"

namespace pcmconley {

struct Options {
    unsigned grid_depth = 4;
    unsigned code_depth = 3;
    std::size_t max_period = 6;
    unsigned backward_bound = 12;
    unsigned max_refinements = 2;
    bool strict_isolation = false;
    bool allow_adjoint_witness = true;
};

// One analysis round at a fixed resolution. Homology data is present only
// when the index pair came out clean at this resolution.
struct Stage {
    LiftedSystem sys;
    InvariantSets inv;
    IsolationResult isolation;
    CompatibilityResult compatibility;
    IndexPair pair;
    std::optional<RelativeHomology> homology;
    std::optional<InducedMaps> maps;
    std::optional<LerayReduction> index_h0;
    std::optional<LerayReduction> index_h1;
    Status status = Status::Unknown;
};

// Runs stages of increasing resolution until the verdict is Certified or
// Violated, or the refinement budget runs out. Each refinement deepens both
// the grid and the words by one.
struct PipelineResult {
    PCMap map;
    Interval N;
    Options options;
    std::vector<Stage> stages;
    Status status = Status::Unknown;
    bool nontrivial = false;  // some reduced index block survives

    const Stage& final_stage() const { return stages.back(); }
};

PipelineResult run_pipeline(const PCMap& f, const Interval& N, const Options& opt = {});

// Certified nontrivial index must force a periodic orbit of the map or of
// one of its adjoints inside N; this runs both searches and records whether
// the implication came out true.
struct WazewskiCheck {
    PipelineResult pipeline;
    WitnessSearch map_only;
    WitnessSearch with_adjoints;
    bool nontrivial = false;
    bool conclusion_holds = false;
};

WazewskiCheck check_wazewski(const PCMap& f, const Interval& N, const Options& opt = {});

}  // namespace pcmconley
