#pragma once

#include "pcmconley/rational.hpp"
#include "pcmconley/zmatrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pcmconley {

// Polynomial with rational coefficients, ascending order. Normal form: no
// trailing zeros, so the zero polynomial has an empty coefficient vector.
struct QPoly {
    std::vector<Rational> c;

    static QPoly zero() { return {}; }
    static QPoly constant(Rational v);
    static QPoly x();
    static QPoly from(std::vector<Rational> coeffs);
    static QPoly from_int(const std::vector<BigInt>& coeffs);

    bool is_zero() const { return c.empty(); }
    int degree() const { return int(c.size()) - 1; }
    const Rational& lead() const { return c.back(); }
    bool is_unit() const { return degree() == 0; }

    QPoly monic() const;

    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c == b.c; }

    // Euclidean division by a nonzero divisor: a = q*b + r, deg r < deg b.
    static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
    // True when b divides a exactly.
    static bool divides(const QPoly& b, const QPoly& a);

    std::string str() const;  // e.g. "x^3 - x + 1/2"
};

// Monic nonunit invariant factors of xI - A over the rationals, in
// divisibility order (each divides the next). Their product is the
// characteristic polynomial; the last one is the minimal polynomial. Two
// integer matrices are similar over the rationals iff these lists agree.
std::vector<QPoly> invariant_factors(const ZMatrix& A);

// char_poly(A) as a QPoly.
QPoly char_poly_q(const ZMatrix& A);

// Removes every factor of x, i.e. strips the trailing zero coefficients:
// x^2(x^3 - 1) becomes x^3 - 1. The zero polynomial stays zero.
QPoly strip_x_factors(const QPoly& p);

}  // namespace pcmconley
