#include "pcmconley/lifted.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcmconley {

std::vector<Interval> make_grid(const PCMap& f, const Interval& N, unsigned depth) {
    if (depth > 20) throw std::invalid_argument("grid_depth above 20 is not supported");
    std::set<Rational> cuts = {N.lo, N.hi};
    for (const auto& p : f.pieces) {
        for (const Rational& c : {p.domain.lo, p.domain.hi})
            if (N.contains(c)) cuts.insert(c);
    }
    std::vector<Interval> cells;
    auto it = cuts.begin();
    Rational prev = *it;
    for (++it; it != cuts.end(); ++it) {
        const Rational seg = (*it - prev) / Rational(BigInt(1) << depth);
        Rational lo = prev;
        for (long long i = 0; i < (1LL << depth); ++i) {
            const Rational hi = (i + 1 == (1LL << depth)) ? *it : lo + seg;
            cells.emplace_back(lo, hi);
            lo = hi;
        }
        prev = *it;
    }
    return cells;
}

std::optional<Interval> feasibility(const PCMap& f, const Interval& cell, const Word& w) {
    if (w.empty()) throw std::invalid_argument("feasibility: empty word");
    std::optional<Interval> F = intersect(cell, f.pieces.at(w[0]).domain);
    if (!F) return std::nullopt;
    Rational alpha = f.pieces[w[0]].a;
    Rational beta = f.pieces[w[0]].b;
    for (std::size_t i = 1; i < w.size(); ++i) {
        const Piece& p = f.pieces.at(w[i]);
        if (alpha.is_zero()) {
            if (!p.domain.contains(beta)) return std::nullopt;
        } else {
            F = intersect(*F, affine_preimage(p.domain, alpha, beta));
            if (!F) return std::nullopt;
        }
        beta = p.a * beta + p.b;
        alpha = p.a * alpha;
    }
    return F;
}

namespace {

// Depth-first extension of feasible words over one cell; enumerates symbols
// in ascending order so the vertex list comes out word-lexicographic.
void extend_words(const PCMap& f, std::size_t cell_index, const Interval& cell, Word& w,
                  const Interval& F, const Rational& alpha, const Rational& beta,
                  unsigned code_depth, std::vector<LiftedVertex>& out) {
    if (w.size() == code_depth) {
        out.push_back(LiftedVertex{cell_index, w, F});
        return;
    }
    for (std::size_t q = 0; q < f.pieces.size(); ++q) {
        const Piece& p = f.pieces[q];
        std::optional<Interval> F2;
        if (alpha.is_zero()) {
            if (p.domain.contains(beta)) F2 = F;
        } else {
            F2 = intersect(F, affine_preimage(p.domain, alpha, beta));
        }
        if (!F2) continue;
        w.push_back(q);
        extend_words(f, cell_index, cell, w, *F2, p.a * alpha, p.a * beta + p.b, code_depth,
                     out);
        w.pop_back();
    }
}

}  // namespace

LiftedSystem build_lifted_system(const PCMap& f, const GridSpec& spec) {
    if (spec.code_depth == 0) throw std::invalid_argument("code_depth must be at least 1");
    if (spec.N.is_point() || spec.N.lo < f.space.lo || f.space.hi < spec.N.hi)
        throw std::invalid_argument("N = " + spec.N.str() +
                                    " is not a nondegenerate subinterval of the space " +
                                    f.space.str());

    LiftedSystem sys;
    sys.map = f;
    sys.spec = spec;
    sys.cells = make_grid(f, spec.N, spec.grid_depth);

    for (std::size_t ci = 0; ci < sys.cells.size(); ++ci) {
        const Interval& cell = sys.cells[ci];
        const std::size_t interior = f.piece_index(cell.midpoint());

        std::set<std::size_t> starts = {interior};
        for (const Rational& e : {cell.lo, cell.hi})
            for (std::size_t q : f.closure_pieces(e)) starts.insert(q);

        for (std::size_t w0 : starts) {
            const auto F0 = intersect(cell, f.pieces[w0].domain);
            if (!F0) continue;
            Word w = {w0};
            extend_words(f, ci, cell, w, *F0, f.pieces[w0].a, f.pieces[w0].b, spec.code_depth,
                         sys.vertices);
        }
    }
    std::sort(sys.vertices.begin(), sys.vertices.end(),
              [](const LiftedVertex& a, const LiftedVertex& b) {
                  if (a.cell != b.cell) return a.cell < b.cell;
                  return a.word < b.word;
              });

    // Edges: shift compatibility plus a nonempty meeting of the branch image
    // with the target's feasible set. Candidates are grouped by word prefix.
    const std::size_t k = spec.code_depth;
    std::map<Word, std::vector<std::size_t>> by_prefix;
    for (std::size_t v = 0; v < sys.vertices.size(); ++v) {
        Word prefix(sys.vertices[v].word.begin(),
                    sys.vertices[v].word.begin() + long(k) - 1);
        by_prefix[prefix].push_back(v);
    }
    sys.succ.assign(sys.vertices.size(), {});
    sys.pred.assign(sys.vertices.size(), {});
    for (std::size_t u = 0; u < sys.vertices.size(); ++u) {
        const Word suffix(sys.vertices[u].word.begin() + 1, sys.vertices[u].word.end());
        const auto it = by_prefix.find(suffix);
        if (it == by_prefix.end()) continue;
        const Interval img = sys.branch_image(u);
        for (std::size_t v : it->second) {
            if (touches(img, sys.vertices[v].feas)) {
                sys.succ[u].push_back(v);
                sys.pred[v].push_back(u);
            }
        }
    }
    return sys;
}

std::optional<std::size_t> LiftedSystem::find_vertex(std::size_t cell, const Word& w) const {
    const LiftedVertex probe{cell, w, Interval()};
    auto it = std::lower_bound(vertices.begin(), vertices.end(), probe,
                               [](const LiftedVertex& a, const LiftedVertex& b) {
                                   if (a.cell != b.cell) return a.cell < b.cell;
                                   return a.word < b.word;
                               });
    if (it == vertices.end() || it->cell != cell || it->word != w) return std::nullopt;
    return std::size_t(it - vertices.begin());
}

std::vector<std::size_t> LiftedSystem::vertices_containing(const Rational& x) const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (vertices[v].feas.contains(x)) out.push_back(v);
    return out;
}

std::vector<std::size_t> LiftedSystem::vertices_containing(const Rational& x,
                                                           const Word& w) const {
    std::vector<std::size_t> out;
    for (std::size_t v : vertices_containing(x))
        if (vertices[v].word == w) out.push_back(v);
    return out;
}

std::vector<Interval> LiftedSystem::project(const std::set<std::size_t>& vs) const {
    std::vector<Interval> ivs;
    for (std::size_t v : vs) ivs.push_back(vertices[v].feas);
    std::sort(ivs.begin(), ivs.end());
    std::vector<Interval> merged;
    for (const auto& iv : ivs) {
        if (!merged.empty() && touches(merged.back(), iv))
            merged.back() = hull(merged.back(), iv);
        else
            merged.push_back(iv);
    }
    return merged;
}

std::string to_dot(const LiftedSystem& sys, const std::set<std::size_t>& highlight) {
    std::string s = "digraph coding {\n  rankdir=LR;\n  node [shape=box];\n";
    for (std::size_t v = 0; v < sys.vertices.size(); ++v) {
        const LiftedVertex& lv = sys.vertices[v];
        std::string sym;
        for (std::size_t q : lv.word) sym += std::to_string(q);
        s += "  v" + std::to_string(v) + " [label=\"" + std::to_string(lv.cell) + ":" +
             sys.cells[lv.cell].str() + "|" + sym + "\"";
        if (highlight.count(v)) s += ", style=filled, fillcolor=lightgray";
        s += "];\n";
    }
    for (std::size_t u = 0; u < sys.vertices.size(); ++u)
        for (std::size_t v : sys.succ[u])
            s += "  v" + std::to_string(u) + " -> v" + std::to_string(v) + ";\n";
    s += "}\n";
    return s;
}

}  // namespace pcmconley
