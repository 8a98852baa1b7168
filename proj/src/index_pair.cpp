#include "pcmconley/index_pair.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pcmconley {

bool exits_digraph(const LiftedSystem& sys, std::size_t v) {
    const Interval image = sys.branch_image(v);
    std::vector<Interval> covers;
    covers.reserve(sys.succ[v].size());
    for (std::size_t u : sys.succ[v]) covers.push_back(sys.vertices[u].feas);
    std::sort(covers.begin(), covers.end());
    // Sweep from the left edge of the image; a gap before reaching the right
    // edge means part of the image escapes every successor.
    Rational c = image.lo;
    for (const Interval& iv : covers) {
        if (iv.lo > c) return true;
        c = max(c, iv.hi);
    }
    return c < image.hi;
}

namespace {

std::vector<Rational> interior_endpoints(const LiftedSystem& sys) {
    std::vector<Rational> out;
    for (const Rational& e : {sys.spec.N.lo, sys.spec.N.hi})
        if (sys.map.space.contains_in_interior(e)) out.push_back(e);
    return out;
}

}  // namespace

IndexPair build_index_pair(const LiftedSystem& sys, const InvariantSets& inv) {
    IndexPair pair;
    for (std::size_t v = 0; v < sys.vertices.size(); ++v) pair.p1.insert(v);

    for (std::size_t v = 0; v < sys.vertices.size(); ++v)
        if (exits_digraph(sys, v)) pair.exits.insert(v);

    // p0 is the forward closure of the exit set.
    std::deque<std::size_t> queue(pair.exits.begin(), pair.exits.end());
    pair.p0 = pair.exits;
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t u : sys.succ[v])
            if (pair.p0.insert(u).second) queue.push_back(u);
    }

    // Construction invariants.
    for (std::size_t v : pair.p0)
        for (std::size_t u : sys.succ[v])
            if (!pair.p0.count(u))
                throw std::logic_error("index pair: p0 not forward closed");
    for (std::size_t v : pair.exits)
        if (!pair.p0.count(v))
            throw std::logic_error("index pair: exit vertex outside p0");

    // Condition 1: the invariant part must avoid p0 and its closure.
    std::map<Word, std::vector<std::size_t>> p0_by_word;
    for (std::size_t v : pair.p0) p0_by_word[sys.vertices[v].word].push_back(v);

    for (std::size_t v : inv.both) {
        if (pair.p0.count(v)) {
            std::ostringstream os;
            os << "invariant vertex " << sys.vertices[v].feas.str() << "|"
               << word_str(sys.vertices[v].word) << " lies in p0";
            pair.failures.push_back(os.str());
            continue;
        }
        auto it = p0_by_word.find(sys.vertices[v].word);
        if (it == p0_by_word.end()) continue;
        for (std::size_t u : it->second) {
            if (touches(sys.vertices[v].feas, sys.vertices[u].feas)) {
                std::ostringstream os;
                os << "invariant vertex " << sys.vertices[v].feas.str() << "|"
                   << word_str(sys.vertices[v].word) << " touches p0 vertex "
                   << sys.vertices[u].feas.str();
                pair.failures.push_back(os.str());
                break;
            }
        }
    }

    const std::vector<Rational> ends = interior_endpoints(sys);
    for (std::size_t v : inv.both) {
        for (const Rational& e : ends) {
            if (sys.vertices[v].feas.contains(e)) {
                std::ostringstream os;
                os << "invariant vertex " << sys.vertices[v].feas.str() << "|"
                   << word_str(sys.vertices[v].word)
                   << " reaches the boundary point " << e.str();
                pair.failures.push_back(os.str());
            }
        }
    }

    pair.status = pair.failures.empty() ? Status::Certified : Status::RefinementNeeded;
    return pair;
}

}  // namespace pcmconley
