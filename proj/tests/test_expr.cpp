#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "regal/errors.hpp"
#include "regal/expr.hpp"

using namespace regal;

static QPoly P(std::vector<long> c) { return QPoly::from_int_coeffs(c); }

TEST_CASE("univariate parsing") {
  CHECK(parse_qpoly("X^3 + X + 1") == P({1, 1, 0, 1}));
  CHECK(parse_qpoly("X^2 - 2") == P({-2, 0, 1}));
  CHECK(parse_qpoly("-X + 5") == P({5, -1}));
  CHECK(parse_qpoly("2*X^2 + 3*X") == P({0, 3, 2}));
  CHECK(parse_qpoly("(X + 1)*(X - 1)") == P({-1, 0, 1}));
  CHECK(parse_qpoly("1/2") == QPoly::constant(rat(1, 2)));
  CHECK(parse_qpoly("X^2 - 1/4") == QPoly({rat(-1, 4), rat(0), rat(1)}));
  CHECK(parse_qpoly("7") == QPoly::constant(rat(7)));
  CHECK(parse_qpoly("0") == QPoly::zero());
}

TEST_CASE("bivariate parsing") {
  BiPoly X = BiPoly::X(), T = BiPoly::T();
  CHECK(parse_bipoly("X^3 + T*X + T") == X * X * X + T * X + T);
  CHECK(parse_bipoly("X^3 + (T - 1)*X + (T - 1)") ==
        X * X * X + (T - BiPoly({QPoly::constant(1)})) * X +
            (T - BiPoly({QPoly::constant(1)})));
  CHECK(parse_bipoly("T^2 - X") == T * T - X);
  CHECK(parse_bipoly("-(X - T)^2") == -((X - T) * (X - T)));
  // custom variable names
  CHECK(parse_bipoly("Y^2 - Z", "Z", "Y") == X * X - T);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_qpoly("X +"), Error);
  CHECK_THROWS_AS(parse_qpoly("X^"), Error);
  CHECK_THROWS_AS(parse_qpoly("X^-1"), Error);
  CHECK_THROWS_AS(parse_qpoly("(X"), Error);
  CHECK_THROWS_AS(parse_qpoly("X X"), Error);    // no implicit multiplication
  CHECK_THROWS_AS(parse_qpoly("2X"), Error);     // no implicit multiplication
  CHECK_THROWS_AS(parse_qpoly("1/0"), Error);    // zero denominator
  CHECK_THROWS_AS(parse_qpoly("T + X"), Error);  // parameter in univariate input
  CHECK_THROWS_AS(parse_bipoly("Y"), Error);     // unknown identifier
  CHECK_THROWS_AS(parse_bipoly("XY"), Error);    // identifier boundary respected
}
