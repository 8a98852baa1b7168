#pragma once

#include "pcmconley/qpoly.hpp"
#include "pcmconley/status.hpp"
#include "pcmconley/zmatrix.hpp"

namespace pcmconley {

// Morphism class representative in the shift category of (Z^d, f): a matrix
// together with a formal delay. Two representatives are identified when they
// agree after enough applications of f.
struct SzMorphism {
    ZMatrix phi;
    std::size_t shift = 0;
};

SzMorphism sz_compose(const SzMorphism& outer, const SzMorphism& inner);

struct SzEquality {
    bool equal = false;
    // Least k with (phi1 f^{n2} - phi2 f^{n1}) f^k == 0; only set when equal.
    std::size_t witness_power = 0;
};

// Representatives are equal iff the difference dies by the dim-th power of
// f, so the check is exact and bounded.
SzEquality sz_equal(const ZMatrix& f, const SzMorphism& a, const SzMorphism& b);

// Conjugates M so that the eventual image and eventual kernel split into a
// block triangular form: T = U M U^{-1} = [L *; 0 C] with L invertible over
// the rationals and C nilpotent. L represents the class of M in the shift
// category; M is equivalent to the zero morphism iff rank == 0.
struct LerayReduction {
    ZMatrix M;
    ZMatrix T;
    ZMatrix L;
    std::size_t rank = 0;
    QPoly char_m;
    QPoly char_l;  // equals char_m with every factor of x removed
    bool trivial() const { return rank == 0; }
};

LerayReduction leray_reduction(const ZMatrix& M);

enum class SzVerdict { Distinct, Equivalent, Undetermined };

// Compares two reduced blocks: different rational invariant factor lists
// separate the classes, equal matrices coincide, and anything in between is
// left undetermined (rational similarity does not settle the integer class).
SzVerdict sz_compare(const ZMatrix& L1, const ZMatrix& L2);

std::string sz_verdict_str(SzVerdict v);

}  // namespace pcmconley
