#include "doctest.h"

#include "pcmconley/rational.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

using pcmconley::BigInt;
using pcmconley::Rational;

TEST_CASE("rational normalization") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, -7).den() == BigInt(1));
    CHECK(Rational(-4, 2).str() == "-2");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(-Rational(1, 3) == Rational(-1, 3));
    CHECK(Rational(-5, 7).abs() == Rational(5, 7));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);

    Rational acc(0);
    for (int i = 0; i < 6; ++i) acc += Rational(1, 6);
    CHECK(acc == Rational(1));
}

TEST_CASE("rational ordering") {
    std::vector<Rational> v = {Rational(1, 2),  Rational(-1, 3), Rational(0),
                               Rational(1, 3),  Rational(1, 4),  Rational(2, 3),
                               Rational(-1, 2)};
    std::sort(v.begin(), v.end());
    CHECK(v.front() == Rational(-1, 2));
    CHECK(v.back() == Rational(2, 3));
    CHECK(std::is_sorted(v.begin(), v.end()));
    CHECK(Rational(-1, 3) < Rational(0));
    CHECK(Rational(1, 4) < Rational(1, 3));
    CHECK(Rational(1, 3) <= Rational(1, 3));
    CHECK(pcmconley::min(Rational(1, 3), Rational(1, 4)) == Rational(1, 4));
    CHECK(pcmconley::max(Rational(1, 3), Rational(1, 4)) == Rational(1, 3));
}

TEST_CASE("rational parse and str round trip") {
    CHECK(Rational::parse("1/2") == Rational(1, 2));
    CHECK(Rational::parse("-1/3") == Rational(-1, 3));
    CHECK(Rational::parse("2/4").str() == "1/2");
    CHECK(Rational::parse("4/-6").str() == "-2/3");
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse(" -12 ") == Rational(-12));
    CHECK(Rational::parse("+3/9").str() == "1/3");
    CHECK(Rational::parse("0/5").str() == "0");

    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1 / 2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);

    std::ostringstream os;
    os << Rational(-5, 15);
    CHECK(os.str() == "-1/3");
}

TEST_CASE("rational big values stay exact") {
    BigInt big = 1;
    for (int i = 0; i < 30; ++i) big *= 10;
    Rational r(big, big * 2);
    CHECK(r == Rational(1, 2));
    Rational s = Rational(big) + Rational(1, big);
    CHECK(s.num() == big * big + 1);
    CHECK(s.den() == big);
}

TEST_CASE("rational field laws on random samples") {
    std::mt19937 rng(20240817u);
    std::uniform_int_distribution<int> num(-40, 40);
    std::uniform_int_distribution<int> den(1, 24);
    auto draw = [&]() { return Rational(num(rng), den(rng)); };
    for (int i = 0; i < 300; ++i) {
        Rational a = draw(), b = draw(), c = draw();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b - b == a);
        if (!b.is_zero()) CHECK(a * b / b == a);
        CHECK(((a < b) + (b < a) + (a == b)) == 1);
        CHECK(Rational::parse(a.str()) == a);
    }
}
