#pragma once

#include "pcmconley/index_pair.hpp"
#include "pcmconley/zmatrix.hpp"

namespace pcmconley {

// Maximal chain of solid vertices sharing one word, glued where consecutive
// feasible intervals meet at a grid point. Runs are the connected components
// of the realized one-complex; words never glue to other words.
struct Run {
    Word word;
    std::vector<std::size_t> verts;  // vertex ids sorted by feas.lo
    Interval support;                // hull of the feasible intervals
};

// Degree-one generator: maximal block of non-exit cells flanked by exit
// cells on both sides of the same run. Collapsing the exit part turns the
// block into a circle.
struct Loop {
    std::size_t run = 0;
    Interval support;
    std::vector<std::size_t> verts;
};

// Homology of the realized pair (all solid cells, exit cells). Generators
// are read off the run structure; betti numbers are recomputed from the
// Smith form of the relative boundary matrix and must agree.
struct RelativeHomology {
    std::vector<Run> runs;  // ordered by (support.lo, support.hi, word)
    std::vector<bool> run_free;
    std::vector<std::size_t> h0_gens;  // ids of runs without exit cells
    std::vector<Loop> h1_gens;
    std::size_t betti0 = 0;
    std::size_t betti1 = 0;
};

RelativeHomology compute_homology(const LiftedSystem& sys, const IndexPair& pair);

// Matrices of the map induced on the relative homology generators. Columns
// follow h0_gens / h1_gens order. Ambiguities that the current resolution
// cannot decide leave status RefinementNeeded with the reasons listed.
struct InducedMaps {
    ZMatrix h0;
    ZMatrix h1;
    Status status = Status::Certified;
    std::vector<std::string> issues;
};

InducedMaps induced_maps(const LiftedSystem& sys, const IndexPair& pair,
                         const RelativeHomology& hom);

}  // namespace pcmconley
