#include "pcmconley/coding.hpp"

#include <stdexcept>

namespace pcmconley {

Word code(const PCMap& f, const Rational& x, std::size_t k) {
    return code_adjoint(f, AdjointSelector{}, x, k);
}

Word code_adjoint(const PCMap& f, const AdjointSelector& s, const Rational& x, std::size_t k) {
    Word w;
    w.reserve(k);
    Rational p = x;
    for (std::size_t i = 0; i < k; ++i) {
        auto it = s.find(p);
        if (it != s.end()) {
            const Piece& pc = f.pieces.at(it->second);
            if (!pc.domain.contains(p))
                throw std::invalid_argument("selector assigns " + p.str() +
                                            " to a piece whose closure does not contain it");
            w.push_back(it->second);
            p = pc.apply(p);
        } else {
            const std::size_t idx = f.piece_index(p);
            w.push_back(idx);
            p = f.pieces[idx].apply(p);
        }
    }
    return w;
}

Rational sigma_metric(const Word& w, const Word& v) {
    if (w.size() != v.size())
        throw std::invalid_argument("sigma_metric: words have different lengths");
    for (std::size_t n = 0; n < w.size(); ++n)
        if (w[n] != v[n]) return Rational(1, static_cast<long long>(n) + 1);
    return Rational(0);
}

Rational graph_metric(const Rational& x, const Word& w, const Rational& y, const Word& v) {
    return max((x - y).abs(), sigma_metric(w, v));
}

std::string word_str(const Word& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w[i]);
    }
    return s + ")";
}

}  // namespace pcmconley
