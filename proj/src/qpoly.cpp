#include "pcmconley/qpoly.hpp"

#include <stdexcept>

namespace pcmconley {

QPoly QPoly::constant(Rational v) {
    QPoly p;
    if (!v.is_zero()) p.c.push_back(std::move(v));
    return p;
}

QPoly QPoly::x() {
    QPoly p;
    p.c = {Rational(0), Rational(1)};
    return p;
}

QPoly QPoly::from(std::vector<Rational> coeffs) {
    QPoly p;
    p.c = std::move(coeffs);
    while (!p.c.empty() && p.c.back().is_zero()) p.c.pop_back();
    return p;
}

QPoly QPoly::from_int(const std::vector<BigInt>& coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (const auto& v : coeffs) c.emplace_back(v);
    return from(std::move(c));
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    QPoly p = *this;
    const Rational l = lead();
    for (auto& v : p.c) v /= l;
    return p;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<Rational> c(std::max(a.c.size(), b.c.size()), Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
    return QPoly::from(std::move(c));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
    std::vector<Rational> c(std::max(a.c.size(), b.c.size()), Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) c[i] -= b.c[i];
    return QPoly::from(std::move(c));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly::zero();
    std::vector<Rational> c(a.c.size() + b.c.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
    return QPoly::from(std::move(c));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw std::domain_error("QPoly: division by zero polynomial");
    QPoly r = a;
    if (a.degree() < b.degree()) return {QPoly::zero(), r};
    std::vector<Rational> q(std::size_t(a.degree() - b.degree()) + 1, Rational(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const std::size_t shift = std::size_t(r.degree() - b.degree());
        const Rational f = r.lead() / b.lead();
        q[shift] = f;
        std::vector<Rational> sub(shift + b.c.size(), Rational(0));
        for (std::size_t i = 0; i < b.c.size(); ++i) sub[shift + i] = b.c[i] * f;
        r = r - QPoly::from(std::move(sub));
    }
    return {QPoly::from(std::move(q)), r};
}

bool QPoly::divides(const QPoly& b, const QPoly& a) {
    if (a.is_zero()) return true;
    if (b.is_zero()) return false;
    return divmod(a, b).second.is_zero();
}

std::string QPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int d = degree(); d >= 0; --d) {
        const Rational& v = c[std::size_t(d)];
        if (v.is_zero()) continue;
        const bool first = s.empty();
        const Rational mag = v.abs();
        if (first)
            s += v.sign() < 0 ? "-" : "";
        else
            s += v.sign() < 0 ? " - " : " + ";
        if (d == 0 || mag != Rational(1)) s += mag.str();
        if (d > 0) {
            if (mag != Rational(1)) s += "*";
            s += "x";
            if (d > 1) s += "^" + std::to_string(d);
        }
    }
    return s;
}

namespace {

// Smith reduction of a square polynomial matrix over Q[x]; only the diagonal
// is needed, so no transforms are tracked.
std::vector<QPoly> poly_smith_diagonal(std::vector<std::vector<QPoly>> m) {
    const std::size_t n = m.size();
    for (std::size_t t = 0; t < n; ++t) {
        bool again = true;
        while (again) {
            again = false;
            // Pivot: nonzero entry of least degree in the remaining block.
            std::size_t pi = t, pj = t;
            int best = -1;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (!m[i][j].is_zero() && (best < 0 || m[i][j].degree() < best)) {
                        best = m[i][j].degree();
                        pi = i;
                        pj = j;
                    }
            if (best < 0) return {};  // impossible for xI - A, caught by caller
            std::swap(m[t], m[pi]);
            for (std::size_t i = 0; i < n; ++i) std::swap(m[i][t], m[i][pj]);

            for (std::size_t i = t + 1; i < n; ++i) {
                if (m[i][t].is_zero()) continue;
                const auto [q, r] = QPoly::divmod(m[i][t], m[t][t]);
                for (std::size_t j = t; j < n; ++j) m[i][j] = m[i][j] - q * m[t][j];
                if (!r.is_zero()) again = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (m[t][j].is_zero()) continue;
                const auto [q, r] = QPoly::divmod(m[t][j], m[t][t]);
                for (std::size_t i = t; i < n; ++i) m[i][j] = m[i][j] - q * m[i][t];
                if (!r.is_zero()) again = true;
            }
            if (again) continue;
            for (std::size_t i = t + 1; i < n && !again; ++i)
                for (std::size_t j = t + 1; j < n && !again; ++j)
                    if (!QPoly::divides(m[t][t], m[i][j])) {
                        for (std::size_t j2 = t; j2 < n; ++j2)
                            m[t][j2] = m[t][j2] + m[i][j2];
                        again = true;
                    }
        }
    }
    std::vector<QPoly> d;
    d.reserve(n);
    for (std::size_t t = 0; t < n; ++t) d.push_back(m[t][t].monic());
    return d;
}

}  // namespace

std::vector<QPoly> invariant_factors(const ZMatrix& A) {
    if (!A.is_square()) throw std::invalid_argument("invariant_factors of non-square matrix");
    const std::size_t n = A.rows();
    std::vector<std::vector<QPoly>> m(n, std::vector<QPoly>(n, QPoly::zero()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = QPoly::constant(-Rational(A.at(i, j)));
            if (i == j) m[i][j] = m[i][j] + QPoly::x();
        }
    auto diag = poly_smith_diagonal(std::move(m));
    if (diag.size() != n) throw std::logic_error("invariant_factors: singular pencil");
    std::vector<QPoly> out;
    for (auto& p : diag)
        if (p.degree() >= 1) out.push_back(std::move(p));
    return out;
}

QPoly char_poly_q(const ZMatrix& A) { return QPoly::from_int(char_poly(A)); }

QPoly strip_x_factors(const QPoly& p) {
    if (p.is_zero()) return p;
    std::size_t k = 0;
    while (k < p.c.size() && p.c[k].is_zero()) ++k;
    QPoly out;
    out.c.assign(p.c.begin() + long(k), p.c.end());
    return out;
}

}  // namespace pcmconley
