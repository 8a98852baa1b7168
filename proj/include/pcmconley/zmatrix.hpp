#pragma once

#include "pcmconley/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace pcmconley {

// Dense integer matrix with exact big-integer entries, row-major.
class ZMatrix {
public:
    ZMatrix() : rows_(0), cols_(0) {}
    ZMatrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, BigInt(0)) {}

    static ZMatrix identity(std::size_t n) {
        ZMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static ZMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    BigInt& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const BigInt& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool is_zero() const;
    bool is_identity() const;
    BigInt trace() const;

    ZMatrix transpose() const;
    ZMatrix pow(std::size_t k) const;  // square matrices, k >= 0

    friend ZMatrix operator*(const ZMatrix& a, const ZMatrix& b);
    friend ZMatrix operator+(const ZMatrix& a, const ZMatrix& b);
    friend ZMatrix operator-(const ZMatrix& a, const ZMatrix& b);
    friend bool operator==(const ZMatrix& a, const ZMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    std::string str() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<BigInt> a_;
};

// U * A * V = D with U, V unimodular and D diagonal, entries nonnegative with
// d_1 | d_2 | ... `diagonal` lists the nonzero entries.
struct SmithForm {
    ZMatrix U;
    ZMatrix D;
    ZMatrix V;
    ZMatrix Uinv;
    ZMatrix Vinv;
    std::vector<BigInt> diagonal;
    std::size_t rank() const { return diagonal.size(); }
};

SmithForm smith_normal_form(const ZMatrix& A);

// Coefficients of det(xI - A), ascending; coeff[n] == 1.
std::vector<BigInt> char_poly(const ZMatrix& A);

}  // namespace pcmconley
