#include "doctest.h"

#include "pcmconley/qpoly.hpp"

#include <random>

using namespace pcmconley;

namespace {

QPoly poly(std::initializer_list<long long> ascending) {
    std::vector<Rational> c;
    for (long long v : ascending) c.emplace_back(v);
    return QPoly::from(std::move(c));
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
    const QPoly a = poly({-1, 0, 1});  // x^2 - 1
    const QPoly b = poly({-1, 1});     // x - 1
    CHECK(a.degree() == 2);
    CHECK((a + b) == poly({-2, 1, 1}));
    CHECK((a - a).is_zero());
    CHECK((b * poly({1, 1})) == a);

    auto [q, r] = QPoly::divmod(a, b);
    CHECK(q == poly({1, 1}));
    CHECK(r.is_zero());
    CHECK(QPoly::divides(b, a));
    CHECK(!QPoly::divides(poly({1, 1, 1}), a));

    auto [q2, r2] = QPoly::divmod(poly({1, 0, 1}), poly({-1, 1}));
    CHECK(q2 == poly({1, 1}));
    CHECK(r2 == poly({2}));

    CHECK_THROWS_AS(QPoly::divmod(a, QPoly::zero()), std::domain_error);
    CHECK(QPoly::from({Rational(2), Rational(4)}).monic() == QPoly::from({Rational(1, 2), Rational(1)}));
}

TEST_CASE("polynomial rendering") {
    CHECK(poly({-1, 0, 0, 1}).str() == "x^3 - 1");
    CHECK(poly({0, -1, 1}).str() == "x^2 - x");
    CHECK(poly({1}).str() == "1");
    CHECK(QPoly::zero().str() == "0");
    CHECK(QPoly::from({Rational(1, 2), Rational(-3)}).str() == "-3*x + 1/2");
}

TEST_CASE("strip x factors") {
    CHECK(strip_x_factors(poly({0, 0, -1, 1})) == poly({-1, 1}));
    CHECK(strip_x_factors(poly({-1, 1})) == poly({-1, 1}));
    CHECK(strip_x_factors(poly({0, 1})) == poly({1}));
    CHECK(strip_x_factors(QPoly::zero()).is_zero());
}

TEST_CASE("invariant factors of known matrices") {
    // Identity: x - 1 twice.
    auto f1 = invariant_factors(ZMatrix::identity(2));
    REQUIRE(f1.size() == 2);
    CHECK(f1[0] == poly({-1, 1}));
    CHECK(f1[1] == poly({-1, 1}));

    // Nonzero nilpotent block: single factor x^2.
    auto f2 = invariant_factors(ZMatrix::from_rows({{0, 1}, {0, 0}}));
    REQUIRE(f2.size() == 1);
    CHECK(f2[0] == poly({0, 0, 1}));

    // Distinct eigenvalues 0 and 1: single factor x^2 - x.
    auto f3 = invariant_factors(ZMatrix::from_rows({{1, 1}, {0, 0}}));
    REQUIRE(f3.size() == 1);
    CHECK(f3[0] == poly({0, -1, 1}));

    // Cyclic permutation: single factor x^3 - 1.
    auto f4 = invariant_factors(ZMatrix::from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}));
    REQUIRE(f4.size() == 1);
    CHECK(f4[0] == poly({-1, 0, 0, 1}));

    CHECK(invariant_factors(ZMatrix(0, 0)).empty());
}

TEST_CASE("invariant factors multiply to the characteristic polynomial") {
    std::mt19937 rng(31337u);
    std::uniform_int_distribution<int> dim(1, 5);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = std::size_t(dim(rng));
        ZMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a.at(i, j) = entry(rng);

        auto fs = invariant_factors(a);
        QPoly prod = QPoly::constant(Rational(1));
        for (std::size_t i = 0; i < fs.size(); ++i) {
            prod = prod * fs[i];
            if (i + 1 < fs.size()) CHECK(QPoly::divides(fs[i], fs[i + 1]));
        }
        CHECK(prod == char_poly_q(a));

        // Similar matrices share the list: conjugate by a shear.
        if (n >= 2) {
            ZMatrix s = ZMatrix::identity(n);
            s.at(0, 1) = 2;
            ZMatrix sinv = ZMatrix::identity(n);
            sinv.at(0, 1) = -2;
            auto gs = invariant_factors(s * a * sinv);
            CHECK(gs == fs);
        }
    }
}
