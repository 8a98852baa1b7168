#include "pcmconley/szymczak.hpp"

#include <stdexcept>

namespace pcmconley {

SzMorphism sz_compose(const SzMorphism& outer, const SzMorphism& inner) {
    return SzMorphism{outer.phi * inner.phi, outer.shift + inner.shift};
}

SzEquality sz_equal(const ZMatrix& f, const SzMorphism& a, const SzMorphism& b) {
    if (!f.is_square()) throw std::invalid_argument("sz_equal: endomorphism must be square");
    const std::size_t n = f.rows();
    const ZMatrix delta = a.phi * f.pow(b.shift) - b.phi * f.pow(a.shift);
    SzEquality out;
    // The image lattices of f^k stop shrinking in rank by k = n, so the
    // difference either dies by then or never does.
    if (!(delta * f.pow(n)).is_zero()) return out;
    out.equal = true;
    ZMatrix acc = delta;
    for (std::size_t k = 0; k <= n; ++k) {
        if (acc.is_zero()) {
            out.witness_power = k;
            return out;
        }
        acc = acc * f;
    }
    throw std::logic_error("sz_equal: bounded witness search failed");
}

namespace {

ZMatrix submatrix(const ZMatrix& m, std::size_t r0, std::size_t r1, std::size_t c0,
                  std::size_t c1) {
    ZMatrix out(r1 - r0, c1 - c0);
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = c0; j < c1; ++j) out.at(i - r0, j - c0) = m.at(i, j);
    return out;
}

}  // namespace

LerayReduction leray_reduction(const ZMatrix& M) {
    if (!M.is_square()) throw std::invalid_argument("leray_reduction: matrix must be square");
    const std::size_t n = M.rows();

    LerayReduction red;
    red.M = M;
    const ZMatrix P = M.pow(n);
    const SmithForm snf = smith_normal_form(P);
    red.rank = snf.rank();
    const std::size_t r = red.rank;

    // In the U basis the eventual image spans the leading r coordinates and
    // M preserves it, so the bottom left block must vanish.
    red.T = snf.U * M * snf.Uinv;
    for (std::size_t i = r; i < n; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (red.T.at(i, j) != 0)
                throw std::logic_error("leray_reduction: image block not invariant");

    if (n > r) {
        const ZMatrix C = submatrix(red.T, r, n, r, n);
        if (!C.pow(n - r).is_zero())
            throw std::logic_error("leray_reduction: complement is not nilpotent");
    }

    red.L = submatrix(red.T, 0, r, 0, r);
    red.char_m = char_poly_q(M);
    red.char_l = char_poly_q(red.L);
    if (r > 0 && red.char_l.c.front().is_zero())
        throw std::logic_error("leray_reduction: reduced block is singular");

    QPoly expected = red.char_l;
    for (std::size_t i = 0; i < n - r; ++i) expected = expected * QPoly::x();
    if (!(expected == red.char_m))
        throw std::logic_error("leray_reduction: characteristic polynomial mismatch");
    if (!(strip_x_factors(red.char_m) == red.char_l))
        throw std::logic_error("leray_reduction: stripped polynomial mismatch");

    return red;
}

SzVerdict sz_compare(const ZMatrix& L1, const ZMatrix& L2) {
    if (invariant_factors(L1) != invariant_factors(L2)) return SzVerdict::Distinct;
    if (L1 == L2) return SzVerdict::Equivalent;
    return SzVerdict::Undetermined;
}

std::string sz_verdict_str(SzVerdict v) {
    switch (v) {
        case SzVerdict::Distinct: return "distinct";
        case SzVerdict::Equivalent: return "equivalent";
        case SzVerdict::Undetermined: return "undetermined";
    }
    return "undetermined";
}

}  // namespace pcmconley
