#pragma once

#include "pcmconley/invariance.hpp"

namespace pcmconley {

// Candidate index pair on the coding digraph. p1 is the full vertex set over
// N; p0 collects the exit vertices (branch image not covered by successor
// feasibility) together with everything reachable from them.
struct IndexPair {
    std::set<std::size_t> p1;
    std::set<std::size_t> p0;
    std::set<std::size_t> exits;
    Status status = Status::RefinementNeeded;
    std::vector<std::string> failures;  // violated pair conditions, if any
};

// True when the branch image of v is not covered by the feasible sets of its
// successors; such an image has points whose onward itinerary leaves the
// digraph over N.
bool exits_digraph(const LiftedSystem& sys, std::size_t v);

// Builds the pair and verifies the index pair conditions against the
// invariant sets:
//   1. the invariant part stays inside p1 minus p0, away from its closure
//      (no shared word and touching feasibility with p0) and away from the
//      interior endpoints of N;
//   2. p0 is positively invariant within p1;
//   3. every exit vertex lies in p0.
// Any failure leaves status RefinementNeeded with the reasons listed.
IndexPair build_index_pair(const LiftedSystem& sys, const InvariantSets& inv);

}  // namespace pcmconley
