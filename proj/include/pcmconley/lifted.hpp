#pragma once

#include "pcmconley/coding.hpp"
#include "pcmconley/pcmap.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace pcmconley {

struct GridSpec {
    Interval N;               // compact neighborhood inside the space
    unsigned grid_depth = 0;  // each breakpoint segment splits into 2^depth cells
    unsigned code_depth = 1;  // word length carried by each vertex, >= 1
};

// Vertex of the coding digraph: a grid cell together with a word of
// code_depth piece symbols. `feas` is the set of points of the cell closure
// whose next code_depth symbols can follow the word under closure semantics:
// x in cl(cell), branch compositions staying in the piece closures along w.
// Solid vertices have a nondegenerate feasible interval; point-feasibility
// vertices capture breakpoint limits and stay in the digraph but carry no
// length.
struct LiftedVertex {
    std::size_t cell = 0;
    Word word;
    Interval feas;
    bool solid() const { return !feas.is_point(); }
};

struct LiftedSystem {
    PCMap map;
    GridSpec spec;
    std::vector<Interval> cells;            // closed cells covering N, in order
    std::vector<LiftedVertex> vertices;     // sorted by (cell, word)
    std::vector<std::vector<std::size_t>> succ;
    std::vector<std::vector<std::size_t>> pred;

    // Image of the feasible set under the first branch of the word.
    Interval branch_image(std::size_t v) const {
        const Piece& p = map.pieces[vertices[v].word.front()];
        return affine_image(vertices[v].feas, p.a, p.b);
    }

    std::optional<std::size_t> find_vertex(std::size_t cell, const Word& w) const;
    // All vertices whose feasible set contains x, optionally word-filtered.
    std::vector<std::size_t> vertices_containing(const Rational& x) const;
    std::vector<std::size_t> vertices_containing(const Rational& x, const Word& w) const;

    // Union of base feasible intervals of the given vertex set, merged into
    // maximal disjoint closed intervals.
    std::vector<Interval> project(const std::set<std::size_t>& vs) const;
};

// Cut points: N's endpoints plus every piece boundary inside N; each segment
// between consecutive cuts is split into 2^depth equal closed cells.
std::vector<Interval> make_grid(const PCMap& f, const Interval& N, unsigned depth);

// Feasible set of a word over a cell, or nullopt when empty.
std::optional<Interval> feasibility(const PCMap& f, const Interval& cell, const Word& w);

// Builds cells, vertices and shift-compatible edges. Throws
// std::invalid_argument when N is not a nondegenerate subinterval of the
// space or code_depth is zero.
LiftedSystem build_lifted_system(const PCMap& f, const GridSpec& spec);

// Graphviz rendering; vertices in `highlight` are drawn filled.
std::string to_dot(const LiftedSystem& sys, const std::set<std::size_t>& highlight = {});

}  // namespace pcmconley
