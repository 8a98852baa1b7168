#include "pcmconley/examples.hpp"

namespace pcmconley::examples {

namespace {

Piece piece(Rational lo, Rational hi, Rational a, Rational b, bool lo_closed = true,
            bool hi_closed = false) {
    return Piece{Interval(std::move(lo), std::move(hi)), lo_closed, hi_closed, std::move(a),
                 std::move(b)};
}

}  // namespace

PCMap worked_example() {
    PCMap m;
    m.name = "worked-example";
    m.space = Interval(Rational(-1), Rational(2));
    m.pieces = {
        piece(Rational(-1), Rational(-1, 3), Rational(1), Rational(1, 3)),
        piece(Rational(-1, 3), Rational(0), Rational(1), Rational(1)),
        piece(Rational(0), Rational(1, 3), Rational(1), Rational(2, 3)),
        piece(Rational(1, 3), Rational(2, 3), Rational(1), Rational(-1, 3)),
        piece(Rational(2, 3), Rational(1), Rational(-1), Rational(4, 3)),
        piece(Rational(1), Rational(4, 3), Rational(1), Rational(-1)),
        piece(Rational(4, 3), Rational(2), Rational(1), Rational(-1, 3), true, true),
    };
    return m;
}

PCMap identity_contraction() {
    PCMap m;
    m.name = "identity-contraction";
    m.space = Interval(Rational(0), Rational(1));
    m.pieces = {
        piece(Rational(0), Rational(1, 2), Rational(1), Rational(0)),
        piece(Rational(1, 2), Rational(1), Rational(1, 2), Rational(1, 2), true, true),
    };
    return m;
}

PCMap split_contraction() {
    PCMap m;
    m.name = "split-contraction";
    m.space = Interval(Rational(0), Rational(1));
    m.pieces = {
        piece(Rational(0), Rational(1, 2), Rational(1, 2), Rational(1, 4)),
        piece(Rational(1, 2), Rational(1), Rational(1, 2), Rational(1, 2), true, true),
    };
    return m;
}

PCMap linear_attractor() {
    PCMap m;
    m.name = "linear-attractor";
    m.space = Interval(Rational(-1), Rational(1));
    m.pieces = {piece(Rational(-1), Rational(1), Rational(1, 2), Rational(0), true, true)};
    return m;
}

PCMap linear_repeller() {
    PCMap m;
    m.name = "linear-repeller";
    m.space = Interval(Rational(-1), Rational(1));
    m.pieces = {piece(Rational(-1), Rational(1), Rational(2), Rational(0), true, true)};
    return m;
}

}  // namespace pcmconley::examples
