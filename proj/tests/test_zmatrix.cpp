#include "doctest.h"

#include "pcmconley/zmatrix.hpp"

#include <random>

using namespace pcmconley;

TEST_CASE("matrix basics") {
    auto a = ZMatrix::from_rows({{1, 2}, {3, 4}});
    auto id = ZMatrix::identity(2);
    CHECK(a * id == a);
    CHECK(id * a == a);
    CHECK(a.trace() == BigInt(5));
    CHECK(a.transpose() == ZMatrix::from_rows({{1, 3}, {2, 4}}));
    CHECK(a.pow(0) == id);
    CHECK(a.pow(2) == ZMatrix::from_rows({{7, 10}, {15, 22}}));
    CHECK((a - a).is_zero());
    CHECK((a + a) == ZMatrix::from_rows({{2, 4}, {6, 8}}));
    CHECK(id.is_identity());
    CHECK(!a.is_identity());
    CHECK(a.str() == "[1 2; 3 4]");
    CHECK_THROWS_AS(a * ZMatrix(3, 3), std::invalid_argument);
}

TEST_CASE("smith normal form of known matrices") {
    auto check_diag = [](const ZMatrix& m, const std::vector<BigInt>& want) {
        auto f = smith_normal_form(m);
        CHECK(f.diagonal == want);
        CHECK(f.U * m * f.V == f.D);
        CHECK((f.U * f.Uinv).is_identity());
        CHECK((f.V * f.Vinv).is_identity());
    };
    check_diag(ZMatrix::from_rows({{1, 2}, {3, 4}}), {BigInt(1), BigInt(2)});
    check_diag(ZMatrix::from_rows({{2, 0}, {0, 3}}), {BigInt(1), BigInt(6)});
    check_diag(ZMatrix::from_rows({{2, 4}, {6, 8}}), {BigInt(2), BigInt(4)});
    check_diag(ZMatrix(2, 3), {});
    check_diag(ZMatrix::from_rows({{0, 1, 0}}), {BigInt(1)});
    check_diag(ZMatrix::from_rows({{6}, {10}, {15}}), {BigInt(1)});
    check_diag(ZMatrix::from_rows({{-3}}), {BigInt(3)});
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937 rng(424242u);
    std::uniform_int_distribution<int> dim(0, 6);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        ZMatrix a(std::size_t(dim(rng)), std::size_t(dim(rng)));
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) = entry(rng);

        auto f = smith_normal_form(a);
        CHECK(f.U * a * f.V == f.D);
        CHECK((f.U * f.Uinv).is_identity());
        CHECK((f.V * f.Vinv).is_identity());
        for (std::size_t i = 0; i < f.D.rows(); ++i)
            for (std::size_t j = 0; j < f.D.cols(); ++j)
                if (i != j) CHECK(f.D.at(i, j) == 0);
        for (std::size_t i = 0; i + 1 < f.diagonal.size(); ++i) {
            CHECK(f.diagonal[i] > 0);
            CHECK(f.diagonal[i + 1] % f.diagonal[i] == 0);
        }
        if (!f.diagonal.empty()) CHECK(f.diagonal.back() > 0);
    }
}

TEST_CASE("characteristic polynomial") {
    CHECK(char_poly(ZMatrix::from_rows({{1, 1}, {0, 0}})) ==
          std::vector<BigInt>{BigInt(0), BigInt(-1), BigInt(1)});
    CHECK(char_poly(ZMatrix::identity(3)) ==
          std::vector<BigInt>{BigInt(-1), BigInt(3), BigInt(-3), BigInt(1)});
    // Companion matrix of x^2 - x - 1.
    CHECK(char_poly(ZMatrix::from_rows({{0, 1}, {1, 1}})) ==
          std::vector<BigInt>{BigInt(-1), BigInt(-1), BigInt(1)});
    // Cyclic permutation on three elements: x^3 - 1.
    CHECK(char_poly(ZMatrix::from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}})) ==
          std::vector<BigInt>{BigInt(-1), BigInt(0), BigInt(0), BigInt(1)});
    CHECK(char_poly(ZMatrix(0, 0)) == std::vector<BigInt>{BigInt(1)});
}
