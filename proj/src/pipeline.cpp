#include "pcmconley/pipeline.hpp"

namespace pcmconley {

namespace {

Stage run_stage(const PCMap& f, const GridSpec& spec, const Options& opt) {
    Stage st;
    st.sys = build_lifted_system(f, spec);
    st.inv = coding_invariant_sets(st.sys);
    st.isolation = is_isolating(st.sys, st.inv, opt.strict_isolation);
    st.compatibility = is_compatible(st.sys, st.inv, opt.backward_bound);

    if (st.isolation.status == Status::Violated || st.compatibility.status == Status::Violated) {
        st.status = Status::Violated;
        return st;
    }

    st.pair = build_index_pair(st.sys, st.inv);
    if (st.pair.status == Status::Certified) {
        st.homology = compute_homology(st.sys, st.pair);
        st.maps = induced_maps(st.sys, st.pair, *st.homology);
        if (st.maps->status == Status::Certified) {
            st.index_h0 = leray_reduction(st.maps->h0);
            st.index_h1 = leray_reduction(st.maps->h1);
        }
    }

    if (st.isolation.status == Status::Unknown || st.compatibility.status == Status::Unknown)
        st.status = Status::Unknown;
    else if (st.pair.status != Status::Certified ||
             (st.maps && st.maps->status != Status::Certified))
        st.status = Status::RefinementNeeded;
    else
        st.status = Status::Certified;
    return st;
}

}  // namespace

PipelineResult run_pipeline(const PCMap& f, const Interval& N, const Options& opt) {
    PipelineResult result;
    result.map = f;
    result.N = N;
    result.options = opt;

    GridSpec spec{N, opt.grid_depth, opt.code_depth};
    for (unsigned round = 0; round <= opt.max_refinements; ++round) {
        result.stages.push_back(run_stage(f, spec, opt));
        result.status = result.stages.back().status;
        if (result.status == Status::Certified || result.status == Status::Violated) break;
        spec.grid_depth += 1;
        spec.code_depth += 1;
    }

    const Stage& last = result.final_stage();
    result.nontrivial = result.status == Status::Certified &&
                        ((last.index_h0 && !last.index_h0->trivial()) ||
                         (last.index_h1 && !last.index_h1->trivial()));
    return result;
}

WazewskiCheck check_wazewski(const PCMap& f, const Interval& N, const Options& opt) {
    WazewskiCheck check;
    check.pipeline = run_pipeline(f, N, opt);
    check.map_only = find_periodic_witness(f, N, opt.max_period, false);
    check.with_adjoints = find_periodic_witness(f, N, opt.max_period, true);
    check.nontrivial = check.pipeline.nontrivial;
    const bool witness =
        opt.allow_adjoint_witness ? check.with_adjoints.found() : check.map_only.found();
    check.conclusion_holds = !check.nontrivial || witness;
    return check;
}

}  // namespace pcmconley
