#include "doctest.h"

#include "pcmconley/examples.hpp"
#include "pcmconley/index_pair.hpp"
#include "pcmconley/invariance.hpp"

#include <algorithm>

using namespace pcmconley;

namespace {

Rational r(long long n, long long d = 1) { return Rational(n, d); }

struct Setup {
    LiftedSystem sys;
    InvariantSets inv;
    IndexPair pair;
};

Setup make(const PCMap& f, Rational lo, Rational hi, unsigned grid, unsigned code) {
    Setup s{build_lifted_system(f, GridSpec{Interval(std::move(lo), std::move(hi)), grid, code}),
            {},
            {}};
    s.inv = coding_invariant_sets(s.sys);
    s.pair = build_index_pair(s.sys, s.inv);
    return s;
}

}  // namespace

TEST_CASE("a self-map neighborhood has no exit set") {
    const auto s = make(examples::worked_example(), r(-1, 3), r(4, 3), 1, 3);
    CHECK(s.pair.status == Status::Certified);
    CHECK(s.pair.exits.empty());
    CHECK(s.pair.p0.empty());
    CHECK(s.pair.p1.size() == s.sys.vertices.size());
    for (std::size_t v = 0; v < s.sys.vertices.size(); ++v) CHECK(!exits_digraph(s.sys, v));
}

TEST_CASE("invariant feasibility on the boundary blocks the pair") {
    const auto s = make(examples::worked_example(), r(-1, 3), r(4, 3), 0, 3);
    CHECK(s.pair.status == Status::RefinementNeeded);
    CHECK(s.pair.exits.empty());
    REQUIRE(!s.pair.failures.empty());
    for (const std::string& msg : s.pair.failures)
        CHECK(msg.find("boundary point") != std::string::npos);
}

TEST_CASE("expansion exits through the ends of the feasible band") {
    const auto s = make(examples::linear_repeller(), r(-1, 2), r(1, 2), 5, 3);
    CHECK(s.pair.status == Status::Certified);
    // Eighteen vertices: sixteen solid cells of the band [-1/4,1/4] plus the
    // two one-point stubs where neighboring cells only reach the band edge.
    CHECK(s.sys.vertices.size() == 18);
    // The outer half of each band arm maps past the band and must exit; the
    // stubs are swept into p0 as their forward closure.
    CHECK(s.pair.exits.size() == 8);
    CHECK(s.pair.p0.size() == 10);

    std::vector<Interval> exit_feas;
    for (std::size_t v : s.pair.exits) exit_feas.push_back(s.sys.vertices[v].feas);
    std::sort(exit_feas.begin(), exit_feas.end());
    const std::vector<Interval> expected = {
        Interval(r(-1, 4), r(-7, 32)),  Interval(r(-7, 32), r(-3, 16)),
        Interval(r(-3, 16), r(-5, 32)), Interval(r(-5, 32), r(-1, 8)),
        Interval(r(1, 8), r(5, 32)),    Interval(r(5, 32), r(3, 16)),
        Interval(r(3, 16), r(7, 32)),   Interval(r(7, 32), r(1, 4))};
    CHECK(exit_feas == expected);
    for (std::size_t v = 0; v < s.sys.vertices.size(); ++v)
        if (!s.sys.vertices[v].solid()) CHECK(s.pair.p0.count(v) == 1);

    // The invariant core stays clear of p0.
    const auto proj = s.sys.project(s.inv.both);
    REQUIRE(proj.size() == 1);
    CHECK(proj[0] == Interval(r(-1, 16), r(1, 16)));
    for (std::size_t v : s.inv.both) CHECK(s.pair.p0.count(v) == 0);
}

TEST_CASE("a coarse repeller grid lets the invariant core leak into p0") {
    const auto s = make(examples::linear_repeller(), r(-1, 2), r(1, 2), 3, 3);
    CHECK(s.pair.status == Status::RefinementNeeded);
    bool invariant_in_p0 = false;
    for (std::size_t v : s.inv.both) invariant_in_p0 = invariant_in_p0 || s.pair.p0.count(v) > 0;
    CHECK(invariant_in_p0);
    for (const std::string& msg : s.pair.failures)
        CHECK(msg.find("invariant vertex") != std::string::npos);
}

TEST_CASE("matching grid and band resolution leaves a p0 contact") {
    // The invariant estimate ends exactly where the exit cells begin when the
    // cell width is half the band radius, so the pair fails by a touch and
    // deepening both depths together reproduces the same geometry.
    const auto s = make(examples::linear_repeller(), r(-1, 2), r(1, 2), 4, 3);
    CHECK(s.pair.status == Status::RefinementNeeded);
    CHECK(s.pair.exits.size() == 4);
    const auto proj = s.sys.project(s.inv.both);
    REQUIRE(proj.size() == 1);
    CHECK(proj[0] == Interval(r(-1, 8), r(1, 8)));
    for (std::size_t v : s.inv.both) CHECK(s.pair.p0.count(v) == 0);
    REQUIRE(s.pair.failures.size() == 2);
    for (const std::string& msg : s.pair.failures)
        CHECK(msg.find("touches p0 vertex") != std::string::npos);
}

TEST_CASE("exit closure invariants hold across the example maps") {
    const std::vector<std::pair<PCMap, Interval>> cases = {
        {examples::worked_example(), Interval(r(-1, 3), r(4, 3))},
        {examples::linear_attractor(), Interval(r(-1, 2), r(1, 2))},
        {examples::linear_repeller(), Interval(r(-1, 2), r(1, 2))},
        {examples::split_contraction(), Interval(r(1, 4), r(3, 4))},
        {examples::identity_contraction(), Interval(r(0), r(3, 5))}};
    for (const auto& [f, N] : cases) {
        for (unsigned grid : {2u, 4u}) {
            const auto s = make(f, N.lo, N.hi, grid, 3);
            for (std::size_t v : s.pair.exits) CHECK(s.pair.p0.count(v) == 1);
            for (std::size_t v : s.pair.p0)
                for (std::size_t u : s.sys.succ[v]) CHECK(s.pair.p0.count(u) == 1);
            for (std::size_t v = 0; v < s.sys.vertices.size(); ++v)
                if (!s.pair.p0.count(v)) CHECK(!exits_digraph(s.sys, v));
        }
    }
}

TEST_CASE("contraction pairs push the overflow branch into p0") {
    const auto s = make(examples::split_contraction(), r(1, 4), r(3, 4), 2, 3);
    CHECK(s.pair.status == Status::Certified);
    CHECK(!s.pair.exits.empty());
    // Every exit sits on the upper branch, whose image leaves N.
    for (std::size_t v : s.pair.exits) {
        CHECK(s.sys.vertices[v].word.front() == 1);
        CHECK(s.sys.vertices[v].solid());
    }
    // The one-point limit vertices of the upper branch word are not dragged in.
    for (std::size_t v = 0; v < s.sys.vertices.size(); ++v)
        if (!s.sys.vertices[v].solid()) CHECK(s.pair.p0.count(v) == 0);
}
