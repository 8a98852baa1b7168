#include "pcmconley/invariance.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>

namespace pcmconley {

namespace {

// Largest subset in which every vertex has an out-neighbor (forward = true)
// or in-neighbor (forward = false), by peeling dead ends.
std::set<std::size_t> alive(const LiftedSystem& sys, bool forward) {
    const auto& out = forward ? sys.succ : sys.pred;
    const auto& in = forward ? sys.pred : sys.succ;
    std::vector<std::size_t> degree(out.size());
    std::deque<std::size_t> dead;
    for (std::size_t v = 0; v < out.size(); ++v) {
        degree[v] = out[v].size();
        if (degree[v] == 0) dead.push_back(v);
    }
    std::vector<bool> removed(out.size(), false);
    while (!dead.empty()) {
        const std::size_t v = dead.front();
        dead.pop_front();
        if (removed[v]) continue;
        removed[v] = true;
        for (std::size_t u : in[v])
            if (!removed[u] && --degree[u] == 0) dead.push_back(u);
    }
    std::set<std::size_t> out_set;
    for (std::size_t v = 0; v < out.size(); ++v)
        if (!removed[v]) out_set.insert(v);
    return out_set;
}

}  // namespace

InvariantSets coding_invariant_sets(const LiftedSystem& sys) {
    InvariantSets inv;
    inv.plus = alive(sys, true);
    inv.minus = alive(sys, false);
    std::set_intersection(inv.plus.begin(), inv.plus.end(), inv.minus.begin(), inv.minus.end(),
                          std::inserter(inv.both, inv.both.begin()));
    return inv;
}

std::set<std::size_t> forward_alive_randomized(const LiftedSystem& sys, unsigned seed) {
    std::mt19937 rng(seed);
    std::set<std::size_t> remaining;
    for (std::size_t v = 0; v < sys.vertices.size(); ++v) remaining.insert(v);
    while (true) {
        std::vector<std::size_t> dead;
        for (std::size_t v : remaining) {
            bool has_succ = false;
            for (std::size_t u : sys.succ[v])
                if (remaining.count(u)) {
                    has_succ = true;
                    break;
                }
            if (!has_succ) dead.push_back(v);
        }
        if (dead.empty()) return remaining;
        // Remove a random nonempty subset of the current dead ends.
        std::shuffle(dead.begin(), dead.end(), rng);
        const std::size_t take = 1 + std::size_t(rng() % dead.size());
        for (std::size_t i = 0; i < take && i < dead.size(); ++i) remaining.erase(dead[i]);
    }
}

namespace {

std::vector<Rational> interior_endpoints(const LiftedSystem& sys) {
    std::vector<Rational> rel;
    if (sys.map.space.lo < sys.spec.N.lo) rel.push_back(sys.spec.N.lo);
    if (sys.spec.N.hi < sys.map.space.hi) rel.push_back(sys.spec.N.hi);
    return rel;
}

// Periodic orbit of g through e staying in N: e, g(e), ..., g^{p-1}(e), with
// g^p(e) == e and every point inside N.
std::optional<std::vector<Rational>> periodic_orbit_through(
    const PCMap& f, const AdjointSelector& s, const Interval& N, const Rational& e,
    unsigned bound) {
    std::vector<Rational> orbit = {e};
    Rational x = e;
    for (unsigned i = 0; i < bound; ++i) {
        try {
            x = f.eval_adjoint(x, s);
        } catch (const std::exception&) {
            return std::nullopt;
        }
        if (!N.contains(x)) return std::nullopt;
        if (x == e) return orbit;
        orbit.push_back(x);
    }
    return std::nullopt;
}

}  // namespace

IsolationResult is_isolating(const LiftedSystem& sys, const InvariantSets& inv, bool strict,
                             unsigned orbit_bound) {
    IsolationResult res;
    const auto rel = interior_endpoints(sys);
    if (rel.empty()) {
        res.status = Status::Certified;
        res.detail = "N has no endpoint interior to the space";
        return res;
    }
    for (const Rational& e : rel)
        for (std::size_t v : inv.both)
            if (sys.vertices[v].feas.contains(e)) {
                res.touched.push_back(e);
                break;
            }

    if (res.touched.empty()) {
        if (strict) {
            std::set<std::size_t> halo;
            for (const Rational& e : rel)
                for (std::size_t c = 0; c < sys.cells.size(); ++c)
                    if (sys.cells[c].contains(e)) {
                        halo.insert(c);
                        if (c > 0) halo.insert(c - 1);
                        if (c + 1 < sys.cells.size()) halo.insert(c + 1);
                    }
            for (std::size_t v : inv.both)
                if (halo.count(sys.vertices[v].cell)) {
                    res.status = Status::Unknown;
                    res.detail = "strict mode: invariant vertices inside the one-cell halo";
                    return res;
                }
        }
        res.status = Status::Certified;
        res.detail = "invariant set stays off the interior endpoints of N";
        return res;
    }

    // A touched endpoint on an exact periodic orbit inside N is a genuine
    // violation; try the map itself, then each adjoint while few.
    std::vector<AdjointSelector> selectors = {AdjointSelector{}};
    if (sys.map.adjoint_count() > BigInt(1) && sys.map.adjoint_count() <= BigInt(64)) {
        auto all = sys.map.list_adjoints(64);
        selectors.insert(selectors.end(), all.begin(), all.end());
    }
    for (const Rational& e : res.touched)
        for (const auto& s : selectors)
            if (auto orbit = periodic_orbit_through(sys.map, s, sys.spec.N, e, orbit_bound)) {
                res.status = Status::Violated;
                res.witness_orbit = *orbit;
                res.detail = "endpoint " + e.str() + " lies on an exact period-" +
                             std::to_string(orbit->size()) + " orbit inside N";
                return res;
            }

    res.status = Status::Unknown;
    std::string pts;
    for (const auto& e : res.touched) pts += (pts.empty() ? "" : ", ") + e.str();
    res.detail = "invariant vertices reach endpoint(s) " + pts +
                 " but no exact periodic orbit was found";
    return res;
}

namespace {

// Backward orbit search from `target`, branching over the piece choices an
// adjoint may make at breakpoints. `assignment` pins choices made along the
// current path so that one orbit uses one adjoint consistently.
struct BackwardSearch {
    const PCMap& f;
    const Interval& N;
    unsigned bound;
    std::vector<Rational> path;          // path[0] == target
    std::map<Rational, std::size_t> assignment;
    std::vector<Rational> violation;     // backward cycle when found
    bool hit_bound = false;
    std::set<Rational> dpoints;

    Status run(const Rational& target) {
        for (const auto& d : f.discontinuity_set()) dpoints.insert(d);
        path = {target};
        return step(target, 1);
    }

    Status step(const Rational& x, unsigned depth) {
        if (depth > bound) {
            hit_bound = true;
            return Status::Unknown;
        }
        Status out = Status::Certified;
        for (std::size_t q = 0; q < f.pieces.size(); ++q) {
            const Piece& p = f.pieces[q];
            if (p.a.is_zero()) {
                // Constant branch: every point of the piece inside N maps to
                // p.b, an unenumerable fan of predecessors.
                if (p.b == x && intersect(p.domain, N)) {
                    hit_bound = true;
                    out = Status::Unknown;
                }
                continue;
            }
            const Rational y = (x - p.b) / p.a;
            if (!N.contains(y) || !p.domain.contains(y)) continue;
            const bool is_breakpoint = dpoints.count(y) > 0;
            // A non-breakpoint boundary point (space endpoint) only follows
            // its own piece; a breakpoint follows whatever branch the
            // adjoint of this orbit assigns it, consistently along the path.
            if (!is_breakpoint && !p.contains(y)) continue;
            bool fresh = false;
            if (is_breakpoint) {
                auto it = assignment.find(y);
                if (it != assignment.end()) {
                    if (it->second != q) continue;
                } else {
                    fresh = true;
                }
            }
            if (std::find(path.begin(), path.end(), y) != path.end()) {
                violation = path;
                violation.push_back(y);
                return Status::Violated;
            }
            if (fresh) assignment[y] = q;
            path.push_back(y);
            const Status sub = step(y, depth + 1);
            path.pop_back();
            if (fresh) assignment.erase(y);
            if (sub == Status::Violated) return Status::Violated;
            if (sub == Status::Unknown) out = Status::Unknown;
        }
        return out;
    }
};

}  // namespace

CompatibilityResult is_compatible(const LiftedSystem& sys, const InvariantSets& inv,
                                  unsigned backward_bound) {
    CompatibilityResult res;
    const auto rel = interior_endpoints(sys);
    const auto dset = sys.map.discontinuity_set();
    for (const Rational& e : rel)
        if (std::find(dset.begin(), dset.end(), e) != dset.end())
            res.boundary_points.push_back(e);

    if (res.boundary_points.empty()) {
        res.status = Status::Certified;
        res.tier1 = true;
        res.detail = "no breakpoint lies on the interior boundary of N";
        return res;
    }

    for (const Rational& b : res.boundary_points) {
        bool reached = false;
        for (std::size_t v : inv.minus)
            if (sys.vertices[v].feas.contains(b)) {
                reached = true;
                break;
            }
        if (reached) res.tier1_failures.push_back(b);
    }
    if (res.tier1_failures.empty()) {
        res.status = Status::Certified;
        res.tier1 = true;
        res.detail = "no backward-alive vertex reaches a boundary breakpoint";
        return res;
    }

    // Tier 2: exact backward orbit search for each unresolved point.
    res.status = Status::Certified;
    for (const Rational& b : res.tier1_failures) {
        BackwardSearch search{sys.map, sys.spec.N, backward_bound, {}, {}, {}, false, {}};
        const Status s = search.run(b);
        if (s == Status::Violated) {
            res.status = Status::Violated;
            res.detail = "breakpoint " + b.str() + " has a backward orbit staying in N";
            break;
        }
        if (s == Status::Unknown) res.status = Status::Unknown;
    }
    if (res.status == Status::Certified)
        res.detail = "backward orbit search exhausted below the bound";
    else if (res.status == Status::Unknown)
        res.detail = "backward orbit search hit the bound " + std::to_string(backward_bound);

    if (sys.map.adjoint_count() <= BigInt(64)) {
        for (const auto& sel : sys.map.list_adjoints(64)) {
            AdjointFinding finding;
            finding.selector = sel;
            finding.status = Status::Certified;
            for (const Rational& b : res.boundary_points) {
                BackwardSearch search{sys.map, sys.spec.N, backward_bound, {}, {}, {}, false, {}};
                for (const auto& [d, q] : sel) search.assignment[d] = q;
                const Status s = search.run(b);
                if (s == Status::Violated) {
                    finding.status = Status::Violated;
                    finding.orbit = search.violation;
                    break;
                }
                if (s == Status::Unknown) finding.status = Status::Unknown;
            }
            res.details.push_back(std::move(finding));
        }
    }
    return res;
}

}  // namespace pcmconley
