#pragma once

#include "pcmconley/lifted.hpp"
#include "pcmconley/status.hpp"

#include <optional>
#include <set>

namespace pcmconley {

// plus: largest vertex set in which every vertex keeps a successor;
// minus: same for predecessors; both: their intersection, which is also the
// largest set in which every vertex keeps both (vertices on bi-infinite
// walks).
struct InvariantSets {
    std::set<std::size_t> plus;
    std::set<std::size_t> minus;
    std::set<std::size_t> both;
};

InvariantSets coding_invariant_sets(const LiftedSystem& sys);

// Peeling with a randomized removal order; the greatest fixed point is
// order-independent, so this must agree with the deterministic result.
std::set<std::size_t> forward_alive_randomized(const LiftedSystem& sys, unsigned seed);

struct IsolationResult {
    Status status = Status::Unknown;
    // Endpoints of N interior to the space that some invariant vertex's
    // feasible set reaches.
    std::vector<Rational> touched;
    // Exact periodic orbit through a touched endpoint, staying in N.
    std::vector<Rational> witness_orbit;
    std::string detail;
};

// Certified: no vertex of `both` reaches an interior endpoint of N (strict
// mode also keeps the two nearest cells per endpoint empty). Violated: a
// touched endpoint lies on an exact periodic orbit inside N, under the map
// itself or under an adjoint when few enough exist to enumerate.
IsolationResult is_isolating(const LiftedSystem& sys, const InvariantSets& inv,
                             bool strict = false, unsigned orbit_bound = 64);

struct AdjointFinding {
    AdjointSelector selector;
    Status status = Status::Unknown;
    std::vector<Rational> orbit;  // backward orbit fragment on violation
};

struct CompatibilityResult {
    Status status = Status::Unknown;
    std::vector<Rational> boundary_points;  // interior endpoints of N that are breakpoints
    bool tier1 = false;                     // settled by the digraph alone
    std::vector<Rational> tier1_failures;   // boundary points the digraph could not clear
    std::vector<AdjointFinding> details;    // per-adjoint searches when <= 64 adjoints
    std::string detail;
};

// A compatible isolating neighborhood must not admit backward orbits that
// stay in N and end at a breakpoint sitting on the interior boundary of N.
// Tier 1 clears a boundary breakpoint when no backward-alive vertex reaches
// it. Tier 2 runs an exact backward orbit search, branching over adjoint
// choices lazily and consistently (one branch per breakpoint per orbit):
// a consistent backward cycle is a violation, exhaustion is a certificate,
// and hitting `backward_bound` (or a constant branch covering the target)
// leaves that point unknown.
CompatibilityResult is_compatible(const LiftedSystem& sys, const InvariantSets& inv,
                                  unsigned backward_bound = 12);

}  // namespace pcmconley
