#pragma once

#include "pcmconley/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace pcmconley {

// Closed nonempty interval [lo, hi] with lo <= hi. Points are intervals with
// lo == hi. Emptiness is represented externally via std::optional<Interval>.
struct Interval {
    Rational lo;
    Rational hi;

    Interval() : lo(0), hi(0) {}
    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (hi < lo) throw std::invalid_argument("Interval: lo > hi");
    }
    static Interval point(const Rational& x) { return Interval(x, x); }

    bool is_point() const { return lo == hi; }
    Rational length() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / Rational(2); }

    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool contains_in_interior(const Rational& x) const { return lo < x && x < hi; }

    std::string str() const { return "[" + lo.str() + "," + hi.str() + "]"; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
    friend std::strong_ordering operator<=>(const Interval& a, const Interval& b) {
        if (auto c = a.lo <=> b.lo; c != 0) return c;
        return a.hi <=> b.hi;
    }
};

inline std::optional<Interval> intersect(const Interval& a, const Interval& b) {
    const Rational lo = max(a.lo, b.lo);
    const Rational hi = min(a.hi, b.hi);
    if (hi < lo) return std::nullopt;
    return Interval(lo, hi);
}

// Closed intervals touch iff they share at least one point.
inline bool touches(const Interval& a, const Interval& b) {
    return !(a.hi < b.lo) && !(b.hi < a.lo);
}

inline Interval hull(const Interval& a, const Interval& b) {
    return Interval(min(a.lo, b.lo), max(a.hi, b.hi));
}

// Image of [lo, hi] under x -> a*x + b; collapses to a point when a == 0 and
// swaps endpoints when a < 0.
inline Interval affine_image(const Interval& iv, const Rational& a, const Rational& b) {
    const Rational u = a * iv.lo + b;
    const Rational v = a * iv.hi + b;
    return u <= v ? Interval(u, v) : Interval(v, u);
}

// Preimage of [target] under x -> a*x + b restricted to nothing (full line).
// For a == 0 the preimage is the full line when b lands in the target and
// empty otherwise; callers intersect with their own domain, so the full line
// is represented by std::nullopt in a separate channel. To keep the interface
// total, a == 0 is rejected here; feasibility code handles that case itself.
inline Interval affine_preimage(const Interval& target, const Rational& a, const Rational& b) {
    if (a.is_zero()) throw std::domain_error("affine_preimage: zero slope");
    const Rational u = (target.lo - b) / a;
    const Rational v = (target.hi - b) / a;
    return u <= v ? Interval(u, v) : Interval(v, u);
}

}  // namespace pcmconley
