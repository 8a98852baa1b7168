#include "doctest.h"

#include "pcmconley/interval.hpp"

using pcmconley::Interval;
using pcmconley::Rational;

TEST_CASE("interval basics") {
    Interval iv(Rational(-1, 3), Rational(4, 3));
    CHECK(iv.length() == Rational(5, 3));
    CHECK(iv.midpoint() == Rational(1, 2));
    CHECK(iv.contains(Rational(0)));
    CHECK(iv.contains(Rational(-1, 3)));
    CHECK(!iv.contains(Rational(3, 2)));
    CHECK(iv.contains_in_interior(Rational(0)));
    CHECK(!iv.contains_in_interior(Rational(-1, 3)));
    CHECK(Interval::point(Rational(2, 3)).is_point());
    CHECK(iv.str() == "[-1/3,4/3]");
    CHECK_THROWS_AS(Interval(Rational(1), Rational(0)), std::invalid_argument);
}

TEST_CASE("interval intersection and touching") {
    Interval a(Rational(0), Rational(1, 2));
    Interval b(Rational(1, 3), Rational(1));
    auto c = pcmconley::intersect(a, b);
    REQUIRE(c.has_value());
    CHECK(*c == Interval(Rational(1, 3), Rational(1, 2)));

    Interval d(Rational(1, 2), Rational(1));
    auto e = pcmconley::intersect(a, d);
    REQUIRE(e.has_value());
    CHECK(e->is_point());

    CHECK(!pcmconley::intersect(Interval(Rational(0), Rational(1, 3)),
                                Interval(Rational(1, 2), Rational(1)))
               .has_value());

    CHECK(pcmconley::touches(a, d));
    CHECK(!pcmconley::touches(Interval(Rational(0), Rational(1, 4)), d));
    CHECK(pcmconley::hull(a, b) == Interval(Rational(0), Rational(1)));
}

TEST_CASE("interval affine images") {
    Interval iv(Rational(1, 3), Rational(2, 3));
    CHECK(pcmconley::affine_image(iv, Rational(1), Rational(-1, 3)) ==
          Interval(Rational(0), Rational(1, 3)));
    CHECK(pcmconley::affine_image(iv, Rational(-1), Rational(4, 3)) ==
          Interval(Rational(2, 3), Rational(1)));
    CHECK(pcmconley::affine_image(iv, Rational(0), Rational(5)) == Interval::point(Rational(5)));

    Interval target(Rational(0), Rational(1));
    CHECK(pcmconley::affine_preimage(target, Rational(2), Rational(-1)) ==
          Interval(Rational(1, 2), Rational(1)));
    CHECK(pcmconley::affine_preimage(target, Rational(-1), Rational(1)) ==
          Interval(Rational(0), Rational(1)));
    CHECK_THROWS_AS(pcmconley::affine_preimage(target, Rational(0), Rational(0)),
                    std::domain_error);
}

TEST_CASE("interval ordering is lexicographic") {
    Interval a(Rational(0), Rational(1));
    Interval b(Rational(0), Rational(2));
    Interval c(Rational(1, 2), Rational(3, 4));
    CHECK(a < b);
    CHECK(b < c);
    CHECK(a == Interval(Rational(0), Rational(1)));
}
