#pragma once

#include "pcmconley/coding.hpp"
#include "pcmconley/pcmap.hpp"

#include <optional>

namespace pcmconley {

// Exact periodic orbit inside a neighborhood. When the orbit passes through
// breakpoints the selector records which branch each one must take; an empty
// selector means the orbit belongs to the map itself. An identity
// composition yields a whole interval of fixed points, reported alongside
// its midpoint witness.
struct PeriodicWitness {
    std::vector<Rational> orbit;  // x_0 .. x_{p-1}
    Word word;                    // piece index visited at each step
    std::size_t period = 0;
    AdjointSelector selector;
    std::optional<Interval> fixed_interval;
    bool uses_adjoint() const { return !selector.empty(); }
};

struct WitnessSearch {
    std::optional<PeriodicWitness> witness;
    std::size_t max_period_searched = 0;
    bool found() const { return witness.has_value(); }
};

// Searches periods 1..max_period, words in lexicographic order, for an exact
// periodic orbit staying in N. Each candidate is the fixed point of the
// affine composition along its word and is re-verified pointwise. Orbits
// through breakpoints are reported only when allow_adjoints is set.
WitnessSearch find_periodic_witness(const PCMap& f, const Interval& N, std::size_t max_period,
                                    bool allow_adjoints);

}  // namespace pcmconley
