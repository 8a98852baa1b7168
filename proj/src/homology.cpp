#include "pcmconley/homology.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pcmconley {

namespace {

// Maximal non-exit block inside one run, by vertex positions [first, last].
struct Block {
    std::size_t first = 0;
    std::size_t last = 0;
    bool flanked = false;
    Interval support;
};

std::vector<Block> free_blocks(const Run& run, const LiftedSystem& sys, const IndexPair& pair) {
    std::vector<Block> out;
    const std::size_t m = run.verts.size();
    std::size_t i = 0;
    while (i < m) {
        if (pair.p0.count(run.verts[i])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < m && !pair.p0.count(run.verts[j + 1])) ++j;
        Block b;
        b.first = i;
        b.last = j;
        b.flanked = i > 0 && j + 1 < m;
        b.support = hull(sys.vertices[run.verts[i]].feas, sys.vertices[run.verts[j]].feas);
        out.push_back(b);
        i = j + 1;
    }
    return out;
}

void check_against_smith_form(const IndexPair& pair, RelativeHomology& hom) {
    // Relative boundary matrix: rows are non-exit 0-cells, columns non-exit
    // 1-cells. A 0-cell sits on the exit part as soon as one of its incident
    // cells does.
    std::size_t free0 = 0;
    std::size_t free1 = 0;
    std::vector<std::vector<std::pair<std::size_t, int>>> columns;  // (row, coeff)
    for (const Run& run : hom.runs) {
        const std::size_t m = run.verts.size();
        std::vector<std::size_t> zero_row(m + 1, 0);
        std::vector<bool> zero_free(m + 1, false);
        for (std::size_t j = 0; j <= m; ++j) {
            const bool left_exit = j > 0 && pair.p0.count(run.verts[j - 1]);
            const bool right_exit = j < m && pair.p0.count(run.verts[j]);
            if (left_exit || right_exit) continue;
            zero_free[j] = true;
            zero_row[j] = free0++;
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (pair.p0.count(run.verts[i])) continue;
            std::vector<std::pair<std::size_t, int>> col;
            if (zero_free[i]) col.push_back({zero_row[i], -1});
            if (zero_free[i + 1]) col.push_back({zero_row[i + 1], +1});
            columns.push_back(std::move(col));
            ++free1;
        }
    }

    ZMatrix boundary(free0, free1);
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (const auto& [r, v] : columns[c]) boundary.at(r, c) = v;

    const SmithForm snf = smith_normal_form(boundary);
    for (const BigInt& d : snf.diagonal)
        if (d != 1) throw std::logic_error("relative boundary has torsion");
    hom.betti0 = free0 - snf.rank();
    hom.betti1 = free1 - snf.rank();

    if (hom.betti0 != hom.h0_gens.size() || hom.betti1 != hom.h1_gens.size())
        throw std::logic_error("run-structure generators disagree with the Smith form");
}

}  // namespace

RelativeHomology compute_homology(const LiftedSystem& sys, const IndexPair& pair) {
    RelativeHomology hom;

    std::map<Word, std::vector<std::size_t>> by_word;
    for (std::size_t v = 0; v < sys.vertices.size(); ++v)
        if (sys.vertices[v].solid()) by_word[sys.vertices[v].word].push_back(v);

    for (auto& [word, verts] : by_word) {
        std::sort(verts.begin(), verts.end(), [&](std::size_t a, std::size_t b) {
            return sys.vertices[a].feas.lo < sys.vertices[b].feas.lo;
        });
        std::size_t i = 0;
        while (i < verts.size()) {
            Run run;
            run.word = word;
            run.verts.push_back(verts[i]);
            std::size_t j = i;
            while (j + 1 < verts.size() &&
                   touches(sys.vertices[verts[j]].feas, sys.vertices[verts[j + 1]].feas)) {
                ++j;
                run.verts.push_back(verts[j]);
            }
            run.support = hull(sys.vertices[verts[i]].feas, sys.vertices[verts[j]].feas);
            hom.runs.push_back(std::move(run));
            i = j + 1;
        }
    }

    std::sort(hom.runs.begin(), hom.runs.end(), [](const Run& a, const Run& b) {
        if (a.support.lo != b.support.lo) return a.support.lo < b.support.lo;
        if (a.support.hi != b.support.hi) return a.support.hi < b.support.hi;
        return a.word < b.word;
    });

    hom.run_free.resize(hom.runs.size(), false);
    for (std::size_t r = 0; r < hom.runs.size(); ++r) {
        bool touched = false;
        for (std::size_t v : hom.runs[r].verts)
            if (pair.p0.count(v)) {
                touched = true;
                break;
            }
        hom.run_free[r] = !touched;
        if (!touched) hom.h0_gens.push_back(r);
        for (const Block& b : free_blocks(hom.runs[r], sys, pair)) {
            if (!b.flanked) continue;
            Loop loop;
            loop.run = r;
            loop.support = b.support;
            loop.verts.assign(hom.runs[r].verts.begin() + static_cast<std::ptrdiff_t>(b.first),
                              hom.runs[r].verts.begin() + static_cast<std::ptrdiff_t>(b.last) + 1);
            hom.h1_gens.push_back(std::move(loop));
        }
    }

    check_against_smith_form(pair, hom);
    return hom;
}

namespace {

// Words u, v of equal length are shift-compatible when dropping the first
// symbol of u gives a prefix of v.
bool shift_compatible(const Word& u, const Word& v) {
    for (std::size_t i = 1; i < u.size(); ++i)
        if (u[i] != v[i - 1]) return false;
    return true;
}

}  // namespace

InducedMaps induced_maps(const LiftedSystem& sys, const IndexPair& pair,
                         const RelativeHomology& hom) {
    InducedMaps out;
    const std::size_t n0 = hom.h0_gens.size();
    const std::size_t n1 = hom.h1_gens.size();
    out.h0 = ZMatrix(n0, n0);
    out.h1 = ZMatrix(n1, n1);

    std::vector<std::size_t> run_of(sys.vertices.size(), hom.runs.size());
    for (std::size_t r = 0; r < hom.runs.size(); ++r)
        for (std::size_t v : hom.runs[r].verts) run_of[v] = r;
    std::map<std::size_t, std::size_t> h0_row;  // run id -> generator position
    for (std::size_t g = 0; g < n0; ++g) h0_row[hom.h0_gens[g]] = g;

    // Degree zero: each free run maps into the component its solid
    // successors land in. Landing on exit-touching runs only collapses the
    // class; a spread across several surviving components is unresolvable at
    // this depth.
    for (std::size_t g = 0; g < n0; ++g) {
        const Run& run = hom.runs[hom.h0_gens[g]];
        std::set<std::size_t> touched;
        for (std::size_t v : run.verts)
            for (std::size_t u : sys.succ[v])
                if (sys.vertices[u].solid()) touched.insert(run_of[u]);
        std::set<std::size_t> free_hits;
        bool killed_hit = false;
        for (std::size_t r : touched)
            (hom.run_free[r] ? (void)free_hits.insert(r) : (void)(killed_hit = true));
        if (free_hits.empty()) continue;
        if (free_hits.size() == 1 && !killed_hit) {
            out.h0.at(h0_row[*free_hits.begin()], g) = 1;
            continue;
        }
        std::ostringstream os;
        os << "component at " << run.support.str() << "|" << word_str(run.word)
           << " maps across several components";
        out.issues.push_back(os.str());
        out.status = Status::RefinementNeeded;
    }

    // Degree one: push the loop support through the first branch of its word
    // and read off which target loops the image covers. The image must cover
    // whole blocks; an image boundary inside non-exit material is
    // unresolvable at this depth.
    std::vector<std::vector<Block>> blocks_of_run(hom.runs.size());
    std::vector<std::map<std::size_t, std::size_t>> h1_row_by_first(hom.runs.size());
    for (std::size_t r = 0; r < hom.runs.size(); ++r)
        blocks_of_run[r] = free_blocks(hom.runs[r], sys, pair);
    for (std::size_t g = 0; g < n1; ++g) {
        const Loop& loop = hom.h1_gens[g];
        std::size_t first_pos = 0;
        const Run& run = hom.runs[loop.run];
        for (std::size_t i = 0; i < run.verts.size(); ++i)
            if (run.verts[i] == loop.verts.front()) first_pos = i;
        h1_row_by_first[loop.run][first_pos] = g;
    }

    for (std::size_t g = 0; g < n1; ++g) {
        const Loop& loop = hom.h1_gens[g];
        const Word& w = hom.runs[loop.run].word;
        const Piece& branch = sys.map.pieces[w.front()];
        if (branch.a.is_zero()) continue;  // constant branch collapses the loop
        const Interval image = affine_image(loop.support, branch.a, branch.b);
        const int sign = branch.a.sign();

        for (std::size_t r = 0; r < hom.runs.size(); ++r) {
            if (!shift_compatible(w, hom.runs[r].word)) continue;
            auto overlap = intersect(image, hom.runs[r].support);
            if (!overlap || overlap->is_point()) continue;
            for (const Block& b : blocks_of_run[r]) {
                const Rational lo = max(b.support.lo, overlap->lo);
                const Rational hi = min(b.support.hi, overlap->hi);
                if (lo >= hi) continue;
                if (lo > b.support.lo || hi < b.support.hi) {
                    std::ostringstream os;
                    os << "loop at " << loop.support.str() << "|" << word_str(w)
                       << " maps onto part of the block " << b.support.str() << "|"
                       << word_str(hom.runs[r].word);
                    out.issues.push_back(os.str());
                    out.status = Status::RefinementNeeded;
                    continue;
                }
                if (!b.flanked) {
                    std::ostringstream os;
                    os << "loop at " << loop.support.str() << "|" << word_str(w)
                       << " maps over the unflanked block " << b.support.str() << "|"
                       << word_str(hom.runs[r].word);
                    out.issues.push_back(os.str());
                    out.status = Status::RefinementNeeded;
                    continue;
                }
                auto row = h1_row_by_first[r].find(b.first);
                if (row == h1_row_by_first[r].end())
                    throw std::logic_error("flanked block without a generator");
                out.h1.at(row->second, g) += sign;
            }
        }
    }

    return out;
}

}  // namespace pcmconley
