#pragma once

#include "pcmconley/pcmap.hpp"

#include <vector>

namespace pcmconley {

using Word = std::vector<std::size_t>;

// First k symbols of the itinerary of x: the indices of the pieces visited
// by x, f(x), f^2(x), ... Throws std::domain_error when the orbit leaves the
// space before k symbols are produced.
Word code(const PCMap& f, const Rational& x, std::size_t k);

// Itinerary under the adjoint given by `s`: at a reassigned breakpoint the
// symbol is the selected piece and the orbit continues with its branch.
Word code_adjoint(const PCMap& f, const AdjointSelector& s, const Rational& x, std::size_t k);

// max{ 1/(n+1) : w[n] != v[n] }, zero for equal words. Words must have equal
// length.
Rational sigma_metric(const Word& w, const Word& v);

// max of |x - y| and sigma_metric(w, v).
Rational graph_metric(const Rational& x, const Word& w, const Rational& y, const Word& v);

std::string word_str(const Word& w);

}  // namespace pcmconley
