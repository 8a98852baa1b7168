#pragma once

#include "pcmconley/interval.hpp"

#include <map>
#include <string>
#include <vector>

namespace pcmconley {

// One branch of a piecewise map: the affine rule a*x + b on an interval piece
// whose endpoints are individually open or closed. `domain` stores the
// closure; the flags say which endpoints belong to the piece.
struct Piece {
    Interval domain;
    bool lo_closed = true;
    bool hi_closed = false;
    Rational a;
    Rational b;

    bool contains(const Rational& x) const {
        if (x < domain.lo || domain.hi < x) return false;
        if (x == domain.lo && !lo_closed) return false;
        if (x == domain.hi && !hi_closed) return false;
        return true;
    }
    Rational apply(const Rational& x) const { return a * x + b; }
    Interval closure_image() const { return affine_image(domain, a, b); }
};

// Selector for an adjoint map: each reassigned breakpoint maps to the index
// of the piece whose branch is used there. Breakpoints absent from the map
// keep the piece that contains them.
using AdjointSelector = std::map<Rational, std::size_t>;

struct ValidationReport {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
    bool ok() const { return errors.empty(); }
};

// Piecewise continuous map: finitely many affine branches on interval pieces
// that partition the space exactly.
struct PCMap {
    Interval space;
    std::vector<Piece> pieces;
    std::string name;

    // Errors: empty pieces, unsorted pieces, gaps, overlaps, not covering the
    // space, a breakpoint owned by zero or two pieces. Warning: the closure
    // image leaves the space (the map is not a self-map).
    ValidationReport validate() const;

    std::size_t piece_index(const Rational& x) const;
    Rational eval(const Rational& x) const;
    Rational eval_adjoint(const Rational& x, const AdjointSelector& s) const;

    // Interior breakpoints: piece boundaries strictly inside the space.
    std::vector<Rational> discontinuity_set() const;
    // True when the two one-sided branch values at d differ.
    bool is_jump(const Rational& d) const;

    // Indices of all pieces whose domain closure contains x.
    std::vector<std::size_t> closure_pieces(const Rational& x) const;

    // Number of adjoint maps: product over breakpoints of the number of
    // pieces whose closure contains the breakpoint.
    BigInt adjoint_count() const;
    // All adjoint selectors in lexicographic order (breakpoints ascending,
    // piece choices ascending). Throws when the count exceeds `limit`.
    std::vector<AdjointSelector> list_adjoints(std::size_t limit = 4096) const;
    // Selector that assigns every breakpoint its defining piece.
    AdjointSelector identity_selector() const;
};

struct PartitionResult {
    PCMap map;
    // Interior breakpoints where the branches join continuously but with
    // different coefficients, so the pieces cannot merge into one branch.
    std::vector<Rational> kinks;
};

// Merges maximal runs of adjacent pieces carrying the same affine rule.
PartitionResult minimal_partition(const PCMap& in);

}  // namespace pcmconley
