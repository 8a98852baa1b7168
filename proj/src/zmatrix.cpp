#include "pcmconley/zmatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace pcmconley {

ZMatrix ZMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    ZMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ZMatrix: ragged rows");
        std::size_t j = 0;
        for (long long v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

bool ZMatrix::is_zero() const {
    for (const auto& v : a_)
        if (v != 0) return false;
    return true;
}

bool ZMatrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

BigInt ZMatrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
    BigInt t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

ZMatrix ZMatrix::transpose() const {
    ZMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

ZMatrix ZMatrix::pow(std::size_t k) const {
    if (!is_square()) throw std::invalid_argument("pow of non-square matrix");
    ZMatrix acc = identity(rows_);
    for (std::size_t i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

ZMatrix operator*(const ZMatrix& a, const ZMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("ZMatrix: size mismatch in product");
    ZMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const BigInt& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) m.at(i, j) += aik * b.at(k, j);
        }
    return m;
}

ZMatrix operator+(const ZMatrix& a, const ZMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("ZMatrix: size mismatch in sum");
    ZMatrix m = a;
    for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
    return m;
}

ZMatrix operator-(const ZMatrix& a, const ZMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("ZMatrix: size mismatch in difference");
    ZMatrix m = a;
    for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
    return m;
}

std::string ZMatrix::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << at(i, j);
        }
    }
    os << ']';
    return os.str();
}

namespace {

// Elementary operations applied to D are mirrored into U (rows) or V
// (columns) and inverted into Uinv / Vinv so that U*A*V == D and
// U*Uinv == I, V*Vinv == I stay invariant.
struct SmithWork {
    ZMatrix& D;
    ZMatrix& U;
    ZMatrix& V;
    ZMatrix& Uinv;
    ZMatrix& Vinv;

    void row_add(std::size_t i, std::size_t j, const BigInt& q) {
        for (std::size_t k = 0; k < D.cols(); ++k) D.at(i, k) += q * D.at(j, k);
        for (std::size_t k = 0; k < U.cols(); ++k) U.at(i, k) += q * U.at(j, k);
        for (std::size_t k = 0; k < Uinv.rows(); ++k) Uinv.at(k, j) -= q * Uinv.at(k, i);
    }
    void row_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < D.cols(); ++k) std::swap(D.at(i, k), D.at(j, k));
        for (std::size_t k = 0; k < U.cols(); ++k) std::swap(U.at(i, k), U.at(j, k));
        for (std::size_t k = 0; k < Uinv.rows(); ++k) std::swap(Uinv.at(k, i), Uinv.at(k, j));
    }
    void row_negate(std::size_t i) {
        for (std::size_t k = 0; k < D.cols(); ++k) D.at(i, k) = -D.at(i, k);
        for (std::size_t k = 0; k < U.cols(); ++k) U.at(i, k) = -U.at(i, k);
        for (std::size_t k = 0; k < Uinv.rows(); ++k) Uinv.at(k, i) = -Uinv.at(k, i);
    }
    void col_add(std::size_t i, std::size_t j, const BigInt& q) {
        for (std::size_t k = 0; k < D.rows(); ++k) D.at(k, i) += q * D.at(k, j);
        for (std::size_t k = 0; k < V.rows(); ++k) V.at(k, i) += q * V.at(k, j);
        for (std::size_t k = 0; k < Vinv.cols(); ++k) Vinv.at(j, k) -= q * Vinv.at(i, k);
    }
    void col_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < D.rows(); ++k) std::swap(D.at(k, i), D.at(k, j));
        for (std::size_t k = 0; k < V.rows(); ++k) std::swap(V.at(k, i), V.at(k, j));
        for (std::size_t k = 0; k < Vinv.cols(); ++k) std::swap(Vinv.at(i, k), Vinv.at(j, k));
    }
};

}  // namespace

SmithForm smith_normal_form(const ZMatrix& A) {
    const std::size_t r = A.rows();
    const std::size_t c = A.cols();
    SmithForm f{ZMatrix::identity(r), A,
                ZMatrix::identity(c), ZMatrix::identity(r),
                ZMatrix::identity(c), {}};
    SmithWork w{f.D, f.U, f.V, f.Uinv, f.Vinv};
    ZMatrix& D = f.D;

    const std::size_t n = r < c ? r : c;
    for (std::size_t t = 0; t < n; ++t) {
        // Pivot: nonzero entry of smallest magnitude in the remaining block.
        std::size_t pi = t, pj = t;
        bool found = false;
        BigInt best = 0;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < c; ++j) {
                if (D.at(i, j) == 0) continue;
                BigInt m = boost::multiprecision::abs(D.at(i, j));
                if (!found || m < best) {
                    found = true;
                    best = m;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        w.row_swap(t, pi);
        w.col_swap(t, pj);

        bool again = true;
        while (again) {
            again = false;
            // Clear the pivot column with Euclidean row steps.
            for (std::size_t i = t + 1; i < r; ++i) {
                while (D.at(i, t) != 0) {
                    const BigInt q = D.at(i, t) / D.at(t, t);
                    w.row_add(i, t, -q);
                    if (D.at(i, t) != 0) w.row_swap(t, i);
                }
            }
            // Clear the pivot row with Euclidean column steps; this can
            // reintroduce entries in the column, hence the outer loop.
            for (std::size_t j = t + 1; j < c; ++j) {
                while (D.at(t, j) != 0) {
                    const BigInt q = D.at(t, j) / D.at(t, t);
                    w.col_add(j, t, -q);
                    if (D.at(t, j) != 0) {
                        w.col_swap(t, j);
                        again = true;
                    }
                }
            }
            if (again) continue;
            // Divisibility: fold any non-multiple into the pivot row.
            for (std::size_t i = t + 1; i < r && !again; ++i)
                for (std::size_t j = t + 1; j < c && !again; ++j)
                    if (D.at(i, j) % D.at(t, t) != 0) {
                        w.row_add(t, i, 1);
                        again = true;
                    }
        }
        if (D.at(t, t) < 0) w.row_negate(t);
    }

    for (std::size_t t = 0; t < n; ++t)
        if (D.at(t, t) != 0) f.diagonal.push_back(D.at(t, t));

    if (!(f.U * A * f.V == D)) throw std::logic_error("smith_normal_form: transform mismatch");
    return f;
}

std::vector<BigInt> char_poly(const ZMatrix& A) {
    if (!A.is_square()) throw std::invalid_argument("char_poly of non-square matrix");
    const std::size_t n = A.rows();
    std::vector<BigInt> c(n + 1, BigInt(0));
    c[n] = 1;
    if (n == 0) return c;
    // Faddeev-LeVerrier; every division below is exact over the integers.
    ZMatrix M = A;
    c[n - 1] = -M.trace();
    for (std::size_t k = 2; k <= n; ++k) {
        ZMatrix T = M;
        for (std::size_t i = 0; i < n; ++i) T.at(i, i) += c[n - k + 1];
        M = A * T;
        c[n - k] = -M.trace() / BigInt(k);
    }
    return c;
}

}  // namespace pcmconley
