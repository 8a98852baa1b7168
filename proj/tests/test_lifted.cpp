#include "doctest.h"

#include "pcmconley/examples.hpp"
#include "pcmconley/lifted.hpp"

#include <algorithm>
#include <random>

using namespace pcmconley;

namespace {

Rational r(long long n, long long d = 1) { return Rational(n, d); }

GridSpec spec(Interval N, unsigned grid, unsigned code) { return GridSpec{N, grid, code}; }

}  // namespace

TEST_CASE("grid cuts at piece boundaries, segments split evenly") {
    const PCMap f = examples::worked_example();
    const Interval N(r(-1, 3), r(4, 3));

    auto g0 = make_grid(f, N, 0);
    REQUIRE(g0.size() == 5);  // breakpoints 0, 1/3, 2/3, 1 interior to N
    CHECK(g0.front().lo == r(-1, 3));
    CHECK(g0.back().hi == r(4, 3));
    for (std::size_t i = 0; i + 1 < g0.size(); ++i) CHECK(g0[i].hi == g0[i + 1].lo);
    CHECK(g0[0] == Interval(r(-1, 3), r(0)));
    CHECK(g0[4] == Interval(r(1), r(4, 3)));

    auto g2 = make_grid(f, N, 2);
    CHECK(g2.size() == 20);
    for (std::size_t i = 0; i + 1 < g2.size(); ++i) CHECK(g2[i].hi == g2[i + 1].lo);
    // A cut never lands strictly inside a refined cell.
    for (const Interval& cell : g2)
        for (const Rational& cut : {r(0), r(1, 3), r(2, 3), r(1)})
            CHECK(!cell.contains_in_interior(cut));

    CHECK_THROWS_AS(make_grid(f, N, 21), std::invalid_argument);
}

TEST_CASE("grid on a map with no interior breakpoints") {
    const PCMap f = examples::linear_repeller();
    auto g = make_grid(f, Interval(r(-1, 2), r(1, 2)), 3);
    REQUIRE(g.size() == 8);
    CHECK(g[0].lo == r(-1, 2));
    CHECK(g[0].hi == r(-3, 8));
}

TEST_CASE("feasibility pins closure itineraries exactly") {
    const PCMap f = examples::worked_example();
    const Interval cell(r(1, 3), r(2, 3));

    // Staying in piece 3 closure twice forces the right endpoint.
    auto tight = feasibility(f, cell, Word{3, 3});
    REQUIRE(tight.has_value());
    CHECK(*tight == Interval::point(r(2, 3)));

    // Piece 6 closure is out of reach of piece 3 images.
    CHECK(!feasibility(f, cell, Word{3, 6}).has_value());

    // One-symbol word: the cell meets the piece closure.
    auto whole = feasibility(f, cell, Word{3});
    REQUIRE(whole.has_value());
    CHECK(*whole == cell);

    auto off = feasibility(f, cell, Word{5});
    CHECK(!off.has_value());
}

TEST_CASE("worked example carries exactly five solid words, each a full strip") {
    const PCMap f = examples::worked_example();
    const LiftedSystem sys = build_lifted_system(f, spec(Interval(r(-1, 3), r(4, 3)), 1, 3));

    std::map<Word, std::vector<Interval>> solid;
    for (const LiftedVertex& v : sys.vertices)
        if (v.solid()) solid[v.word].push_back(v.feas);

    const std::map<Word, Interval> expected{
        {Word{1, 4, 3}, Interval(r(-1, 3), r(0))}, {Word{2, 4, 3}, Interval(r(0), r(1, 3))},
        {Word{3, 2, 4}, Interval(r(1, 3), r(2, 3))}, {Word{4, 3, 2}, Interval(r(2, 3), r(1))},
        {Word{5, 2, 4}, Interval(r(1), r(4, 3))}};
    REQUIRE(solid.size() == expected.size());
    for (const auto& [word, strip] : expected) {
        REQUIRE(solid.count(word));
        auto& parts = solid[word];
        std::sort(parts.begin(), parts.end());
        CHECK(parts.front().lo == strip.lo);
        CHECK(parts.back().hi == strip.hi);
        for (std::size_t i = 0; i + 1 < parts.size(); ++i) CHECK(parts[i].hi == parts[i + 1].lo);
    }
}

TEST_CASE("vertices respect their cell and word closures") {
    const PCMap f = examples::worked_example();
    const LiftedSystem sys = build_lifted_system(f, spec(Interval(r(-1, 3), r(4, 3)), 2, 3));
    REQUIRE(!sys.vertices.empty());
    for (const LiftedVertex& v : sys.vertices) {
        CHECK(sys.cells[v.cell].contains(v.feas));
        CHECK(f.pieces[v.word.front()].domain.contains(v.feas));
        auto recomputed = feasibility(f, sys.cells[v.cell], v.word);
        REQUIRE(recomputed.has_value());
        CHECK(*recomputed == v.feas);
    }
    // Vertices are unique per (cell, word) and sorted.
    for (std::size_t i = 0; i + 1 < sys.vertices.size(); ++i) {
        const auto& a = sys.vertices[i];
        const auto& b = sys.vertices[i + 1];
        CHECK((a.cell < b.cell || (a.cell == b.cell && a.word < b.word)));
    }
}

TEST_CASE("point itineraries lift to vertices and edges") {
    const PCMap f = examples::worked_example();
    const Interval N(r(-1, 3), r(4, 3));
    const unsigned k = 3;
    const LiftedSystem sys = build_lifted_system(f, spec(N, 2, k));

    std::mt19937 rng(20240818);
    std::uniform_int_distribution<long long> num(-33, 133);
    int lifted = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const Rational x(num(rng), 100);
        // Keep samples whose finite orbit stays in N so the full word is
        // carried by the digraph.
        bool in_n = N.contains(x);
        Rational y = x;
        for (unsigned j = 0; j + 1 < k + 1 && in_n; ++j) {
            y = f.eval(y);
            in_n = N.contains(y);
        }
        if (!in_n) continue;
        ++lifted;

        const Word w = code(f, x, k);
        const auto at_x = sys.vertices_containing(x, w);
        REQUIRE(!at_x.empty());

        const Rational fx = f.eval(x);
        const Word wf = code(f, fx, k);
        const auto at_fx = sys.vertices_containing(fx, wf);
        REQUIRE(!at_fx.empty());

        bool edge = false;
        for (std::size_t u : at_x)
            for (std::size_t v : at_fx)
                if (std::find(sys.succ[u].begin(), sys.succ[u].end(), v) != sys.succ[u].end())
                    edge = true;
        CHECK(edge);
    }
    CHECK(lifted > 100);
}

TEST_CASE("breakpoint limits appear as point vertices") {
    const PCMap f = examples::worked_example();
    const LiftedSystem sys = build_lifted_system(f, spec(Interval(r(-1, 3), r(4, 3)), 1, 3));

    // 4/3 can start in piece 6 only as a closure limit; the itinerary then
    // runs 6,5,2 with images 1 and 0.
    const auto ghosts = sys.vertices_containing(r(4, 3), Word{6, 5, 2});
    REQUIRE(!ghosts.empty());
    for (std::size_t v : ghosts) CHECK(sys.vertices[v].feas == Interval::point(r(4, 3)));

    // The repelling fixed point 2/3 of piece 4 survives as a self-looping
    // point vertex on the right-hand cell.
    const auto fixed = sys.vertices_containing(r(2, 3), Word{4, 4, 4});
    REQUIRE(!fixed.empty());
    bool self_loop = false;
    for (std::size_t v : fixed) {
        CHECK(sys.vertices[v].feas == Interval::point(r(2, 3)));
        if (std::find(sys.succ[v].begin(), sys.succ[v].end(), v) != sys.succ[v].end())
            self_loop = true;
    }
    CHECK(self_loop);
}

TEST_CASE("edges require shift compatibility and image contact") {
    const PCMap f = examples::worked_example();
    const LiftedSystem sys = build_lifted_system(f, spec(Interval(r(-1, 3), r(4, 3)), 1, 3));
    std::size_t edges = 0;
    for (std::size_t u = 0; u < sys.vertices.size(); ++u) {
        for (std::size_t v : sys.succ[u]) {
            ++edges;
            const Word& wu = sys.vertices[u].word;
            const Word& wv = sys.vertices[v].word;
            for (std::size_t i = 1; i < wu.size(); ++i) CHECK(wu[i] == wv[i - 1]);
            CHECK(touches(sys.branch_image(u), sys.vertices[v].feas));
        }
    }
    CHECK(edges > 0);
    // pred mirrors succ.
    std::size_t back = 0;
    for (std::size_t v = 0; v < sys.vertices.size(); ++v) back += sys.pred[v].size();
    CHECK(back == edges);
}

TEST_CASE("projection merges feasible sets into disjoint intervals") {
    const PCMap f = examples::worked_example();
    const LiftedSystem sys = build_lifted_system(f, spec(Interval(r(-1, 3), r(4, 3)), 1, 3));
    std::set<std::size_t> all;
    std::set<std::size_t> solid;
    for (std::size_t v = 0; v < sys.vertices.size(); ++v) {
        all.insert(v);
        if (sys.vertices[v].solid()) solid.insert(v);
    }
    const auto proj = sys.project(solid);
    REQUIRE(proj.size() == 1);
    CHECK(proj[0] == Interval(r(-1, 3), r(4, 3)));
    CHECK(sys.project({}).empty());
    for (const auto& p : sys.project(all)) CHECK(Interval(r(-1, 3), r(4, 3)).contains(p));
}

TEST_CASE("lifted system rejects bad parameters") {
    const PCMap f = examples::worked_example();
    CHECK_THROWS_AS(build_lifted_system(f, spec(Interval(r(0), r(1)), 1, 0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_lifted_system(f, spec(Interval::point(r(0)), 1, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_lifted_system(f, spec(Interval(r(-2), r(1)), 1, 2)),
                    std::invalid_argument);
}

TEST_CASE("dot rendering lists cells and words") {
    const PCMap f = examples::identity_contraction();
    const LiftedSystem sys = build_lifted_system(f, spec(Interval(r(0), r(3, 5)), 1, 2));
    const std::string dot = to_dot(sys, {0});
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
    CHECK(dot.find("|00") != std::string::npos);  // word rendered as symbol digits
    CHECK(dot.find("lightgray") != std::string::npos);
}
