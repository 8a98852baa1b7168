#include "pcmconley/wazewski.hpp"

#include <stdexcept>

namespace pcmconley {

namespace {

bool primitive(const Word& w) {
    const std::size_t p = w.size();
    for (std::size_t d = 1; d < p; ++d) {
        if (p % d != 0) continue;
        bool rep = true;
        for (std::size_t i = d; i < p && rep; ++i) rep = w[i] == w[i - d];
        if (rep) return false;
    }
    return true;
}

// Realizes x0 as a periodic point along w, or refuses: the orbit must stay
// in N and in each piece closure, close up exactly, and not revisit a point
// early. Closure-only visits pin the branch choice at that breakpoint.
std::optional<PeriodicWitness> verify_orbit(const PCMap& f, const Interval& N, const Word& w,
                                            const Rational& x0) {
    PeriodicWitness cand;
    cand.word = w;
    cand.period = w.size();
    Rational x = x0;
    for (std::size_t s : w) {
        const Piece& p = f.pieces[s];
        if (!N.contains(x) || !p.domain.contains(x)) return std::nullopt;
        if (!p.contains(x)) {
            auto it = cand.selector.find(x);
            if (it != cand.selector.end() && it->second != s) return std::nullopt;
            cand.selector[x] = s;
        }
        for (const Rational& seen : cand.orbit)
            if (seen == x) return std::nullopt;
        cand.orbit.push_back(x);
        x = p.apply(x);
    }
    if (x != x0) return std::nullopt;

    // Replay through the evaluator to confirm the orbit is dynamical and the
    // selector choices are the ones actually taken.
    try {
        for (std::size_t j = 0; j < cand.orbit.size(); ++j) {
            const Rational y = cand.selector.empty()
                                   ? f.eval(cand.orbit[j])
                                   : f.eval_adjoint(cand.orbit[j], cand.selector);
            if (y != cand.orbit[(j + 1) % cand.orbit.size()]) return std::nullopt;
        }
    } catch (const std::exception&) {
        return std::nullopt;
    }
    return cand;
}

std::optional<PeriodicWitness> try_word(const PCMap& f, const Interval& N, const Word& w) {
    Rational alpha(1);
    Rational beta(0);
    for (std::size_t s : w) {
        alpha = f.pieces[s].a * alpha;
        beta = f.pieces[s].a * beta + f.pieces[s].b;
    }

    if (alpha == Rational(1)) {
        if (!beta.is_zero()) return std::nullopt;
        // Identity composition: every point whose partial images respect the
        // word is fixed. Pull each constraint back through the partial maps;
        // no branch slope can vanish here since the product is one.
        std::optional<Interval> fixed = N;
        Rational pa(1);
        Rational pb(0);
        for (std::size_t s : w) {
            auto constraint = intersect(f.pieces[s].domain, N);
            if (!constraint) return std::nullopt;
            fixed = intersect(*fixed, affine_preimage(*constraint, pa, pb));
            if (!fixed) return std::nullopt;
            pa = f.pieces[s].a * pa;
            pb = f.pieces[s].a * pb + f.pieces[s].b;
        }
        // Any early self-meeting of partial orbits disqualifies at most one
        // point per pair of steps, so a handful of samples always contains a
        // clean one.
        std::vector<Rational> samples{fixed->midpoint()};
        const Rational span = fixed->length();
        for (long long k = 1; k <= 16; ++k)
            samples.push_back(fixed->lo + span * Rational(k, 17));
        for (const Rational& x : samples) {
            if (auto cand = verify_orbit(f, N, w, x)) {
                cand->fixed_interval = *fixed;
                return cand;
            }
        }
        return std::nullopt;
    }

    const Rational x0 = beta / (Rational(1) - alpha);
    return verify_orbit(f, N, w, x0);
}

}  // namespace

WitnessSearch find_periodic_witness(const PCMap& f, const Interval& N, std::size_t max_period,
                                    bool allow_adjoints) {
    WitnessSearch out;
    out.max_period_searched = max_period;
    const std::size_t symbols = f.pieces.size();
    if (symbols == 0) throw std::invalid_argument("find_periodic_witness: map has no pieces");

    auto advance = [&](Word& w) {
        std::size_t i = w.size();
        while (i > 0) {
            --i;
            if (++w[i] < symbols) return true;
            w[i] = 0;
        }
        return false;
    };

    for (std::size_t p = 1; p <= max_period; ++p) {
        Word w(p, 0);
        do {
            if (!primitive(w)) continue;
            auto cand = try_word(f, N, w);
            if (!cand) continue;
            if (!allow_adjoints && cand->uses_adjoint()) continue;
            out.witness = std::move(cand);
            return out;
        } while (advance(w));
    }
    return out;
}

}  // namespace pcmconley
