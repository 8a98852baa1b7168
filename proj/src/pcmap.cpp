#include "pcmconley/pcmap.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcmconley {

ValidationReport PCMap::validate() const {
    ValidationReport r;
    auto err = [&](std::string m) { r.errors.push_back(std::move(m)); };

    if (space.is_point()) err("space has empty interior");
    if (pieces.empty()) {
        err("no pieces");
        return r;
    }
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (pieces[i].domain.is_point())
            err("piece " + std::to_string(i) + " has empty interior");
    }
    if (!r.errors.empty()) return r;

    if (pieces.front().domain.lo != space.lo)
        err("first piece starts at " + pieces.front().domain.lo.str() + ", space starts at " +
            space.lo.str());
    else if (!pieces.front().lo_closed)
        err("space endpoint " + space.lo.str() + " belongs to no piece");
    if (pieces.back().domain.hi != space.hi)
        err("last piece ends at " + pieces.back().domain.hi.str() + ", space ends at " +
            space.hi.str());
    else if (!pieces.back().hi_closed)
        err("space endpoint " + space.hi.str() + " belongs to no piece");

    for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
        const auto& l = pieces[i];
        const auto& g = pieces[i + 1];
        if (g.domain.lo < l.domain.hi) {
            err("pieces " + std::to_string(i) + " and " + std::to_string(i + 1) + " overlap");
            continue;
        }
        if (l.domain.hi < g.domain.lo) {
            err("gap between pieces " + std::to_string(i) + " and " + std::to_string(i + 1));
            continue;
        }
        const int owners = int(l.hi_closed) + int(g.lo_closed);
        if (owners == 0)
            err("breakpoint " + l.domain.hi.str() + " belongs to no piece");
        else if (owners == 2)
            err("breakpoint " + l.domain.hi.str() + " belongs to two pieces");
    }
    if (!r.errors.empty()) return r;

    for (const auto& p : pieces) {
        const Interval im = p.closure_image();
        if (!space.contains(im)) {
            r.warnings.push_back("not a self-map: piece image " + im.str() +
                                 " leaves the space " + space.str());
            break;
        }
    }
    return r;
}

std::size_t PCMap::piece_index(const Rational& x) const {
    for (std::size_t i = 0; i < pieces.size(); ++i)
        if (pieces[i].contains(x)) return i;
    throw std::domain_error("point " + x.str() + " is outside the space " + space.str());
}

Rational PCMap::eval(const Rational& x) const { return pieces[piece_index(x)].apply(x); }

Rational PCMap::eval_adjoint(const Rational& x, const AdjointSelector& s) const {
    auto it = s.find(x);
    if (it == s.end()) return eval(x);
    if (it->second >= pieces.size())
        throw std::invalid_argument("selector names piece " + std::to_string(it->second) +
                                    " which does not exist");
    const Piece& p = pieces[it->second];
    if (!p.domain.contains(x))
        throw std::invalid_argument("selector assigns " + x.str() +
                                    " to a piece whose closure does not contain it");
    return p.apply(x);
}

std::vector<Rational> PCMap::discontinuity_set() const {
    std::vector<Rational> d;
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i) d.push_back(pieces[i].domain.hi);
    return d;
}

bool PCMap::is_jump(const Rational& d) const {
    const Piece* left = nullptr;
    const Piece* right = nullptr;
    for (const auto& p : pieces) {
        if (p.domain.hi == d) left = &p;
        if (p.domain.lo == d) right = &p;
    }
    if (!left || !right) throw std::invalid_argument(d.str() + " is not an interior breakpoint");
    return left->apply(d) != right->apply(d);
}

std::vector<std::size_t> PCMap::closure_pieces(const Rational& x) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < pieces.size(); ++i)
        if (pieces[i].domain.contains(x)) out.push_back(i);
    return out;
}

BigInt PCMap::adjoint_count() const {
    BigInt n = 1;
    for (const auto& d : discontinuity_set()) n *= BigInt(closure_pieces(d).size());
    return n;
}

std::vector<AdjointSelector> PCMap::list_adjoints(std::size_t limit) const {
    if (adjoint_count() > BigInt(limit))
        throw std::length_error("adjoint count " + adjoint_count().str() + " exceeds limit " +
                                std::to_string(limit));
    const std::vector<Rational> ds = discontinuity_set();
    std::vector<std::vector<std::size_t>> choices;
    choices.reserve(ds.size());
    for (const auto& d : ds) choices.push_back(closure_pieces(d));

    std::vector<AdjointSelector> out;
    std::vector<std::size_t> pick(ds.size(), 0);
    while (true) {
        AdjointSelector s;
        for (std::size_t i = 0; i < ds.size(); ++i) s[ds[i]] = choices[i][pick[i]];
        out.push_back(std::move(s));
        std::size_t i = ds.size();
        while (i > 0) {
            --i;
            if (++pick[i] < choices[i].size()) break;
            pick[i] = 0;
            if (i == 0) return out;
        }
        if (ds.empty()) return out;
    }
}

AdjointSelector PCMap::identity_selector() const {
    AdjointSelector s;
    for (const auto& d : discontinuity_set()) s[d] = piece_index(d);
    return s;
}

PartitionResult minimal_partition(const PCMap& in) {
    PartitionResult res{PCMap{in.space, {}, in.name}, {}};
    for (const auto& p : in.pieces) {
        auto& out = res.map.pieces;
        if (!out.empty() && out.back().a == p.a && out.back().b == p.b) {
            out.back().domain = Interval(out.back().domain.lo, p.domain.hi);
            out.back().hi_closed = p.hi_closed;
        } else {
            out.push_back(p);
        }
    }
    for (const auto& d : res.map.discontinuity_set())
        if (!res.map.is_jump(d)) res.kinks.push_back(d);
    return res;
}

}  // namespace pcmconley
