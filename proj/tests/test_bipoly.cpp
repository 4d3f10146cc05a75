#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "regal/bipoly.hpp"
#include "regal/errors.hpp"

using namespace regal;

static QPoly P(std::vector<long> c) { return QPoly::from_int_coeffs(c); }

TEST_CASE("construction and evaluation") {
  BiPoly X = BiPoly::X(), T = BiPoly::T();
  BiPoly f = X * X * X + T * X + T;  // X^3 + T*X + T
  CHECK(f.degree_X() == 3);
  CHECK(f.degree_T() == 1);
  CHECK(f.total_degree() == 3);
  CHECK(f.eval_T(rat(1)) == P({1, 1, 0, 1}));
  CHECK(f.eval_X(rat(1)) == P({1, 2}));  // 2T + 1
  CHECK(f.str() == "X^3 + (T)*X + (T)");
}

TEST_CASE("resultant and discriminant in X") {
  BiPoly X = BiPoly::X(), T = BiPoly::T();
  // disc_X(X^3 + T*X + T) = -4T^3 - 27T^2
  BiPoly f = X * X * X + T * X + T;
  CHECK(bipoly_discriminant_X(f) == P({0, 0, -27, -4}));

  // disc_X(X^2 - T) = 4T
  BiPoly g = X * X - T;
  CHECK(bipoly_discriminant_X(g) == P({0, 4}));

  // res_X(X - T, X - 2T) = -T  (evaluate the second at X = T)
  CHECK(bipoly_resultant_X(X - T, X - T * rat(2)) == P({0, -1}));
}

TEST_CASE("trinomial family discriminant") {
  // disc_X(X^3 + (T-y)X + (T-y)) = -(T-y)^2 (4(T-y) + 27)
  BiPoly X = BiPoly::X(), T = BiPoly::T();
  for (long y = -3; y <= 3; ++y) {
    BiPoly a = T - BiPoly::from_qpoly_in_T(QPoly::constant(rat(y)));
    BiPoly f = X * X * X + a * X + a;
    QPoly ty = P({-y, 1});
    QPoly expect = -(ty * ty * (ty * rat(4) + QPoly::constant(rat(27))));
    CHECK(bipoly_discriminant_X(f) == expect);
  }
}

TEST_CASE("gcd over the function field") {
  BiPoly X = BiPoly::X(), T = BiPoly::T();
  BiPoly a = (X - T) * (X + T);
  BiPoly b = (X - T) * (X * X + T);
  CHECK(bipoly_gcd_X(a, b) == X - T);
  CHECK(bipoly_gcd_X(X * X + T, X - T).degree_X() == 0);
}

TEST_CASE("bivariate factorization") {
  BiPoly X = BiPoly::X(), T = BiPoly::T();

  // X^2 - T^2 = (X - T)(X + T)
  auto fl = factor_bipoly(X * X - T * T);
  CHECK(fl.unit == rat(1));
  CHECK(fl.content_factors.empty());
  REQUIRE(fl.factors.size() == 2);
  CHECK(fl.factors[0].first == X - T);
  CHECK(fl.factors[0].second == 1);
  CHECK(fl.factors[1].first == X + T);

  // (X - T)^2 keeps its multiplicity
  auto sq = factor_bipoly((X - T) * (X - T));
  REQUIRE(sq.factors.size() == 1);
  CHECK(sq.factors[0].second == 2);
  CHECK(sq.factors[0].first == X - T);

  // content in T is split off: (T^2-1) * X = (T-1)(T+1) * X
  auto cf = factor_bipoly((T * T - BiPoly::from_qpoly_in_T(P({1}))) * X);
  REQUIRE(cf.content_factors.size() == 2);
  CHECK(cf.content_factors[0].first == P({-1, 1}));
  CHECK(cf.content_factors[1].first == P({1, 1}));
  REQUIRE(cf.factors.size() == 1);
  CHECK(cf.factors[0].first == X);

  // irreducible bivariate stays in one piece
  auto ir = factor_bipoly(X * X * X + T * X + T);
  REQUIRE(ir.factors.size() == 1);
  CHECK(ir.factors[0].first == X * X * X + T * X + T);

  // non-monic in X: (T*X - 1)(X + T)
  BiPoly nm = (T * X - BiPoly::from_qpoly_in_T(P({1}))) * (X + T);
  auto nf = factor_bipoly(nm);
  REQUIRE(nf.factors.size() == 2);
  CHECK(nf.unit == rat(1));
  BiPoly prod({QPoly::constant(1)});
  for (auto& [g, m] : nf.factors)
    for (int i = 0; i < m; ++i) prod = prod * g;
  CHECK(prod == nm);
}

TEST_CASE("irreducibility over Q(T)") {
  BiPoly X = BiPoly::X(), T = BiPoly::T();

  BiPoly f = X * X * X + T * X + T;
  auto w = is_irreducible_over_QT(f);
  CHECK(w.irreducible);
  REQUIRE(w.witness_t.has_value());
  // t = 0 gives the reducible X^3; the first accepted point is t = 1
  CHECK(*w.witness_t == rat(1));

  auto w2 = is_irreducible_over_QT(X * X - T * T);
  CHECK(!w2.irreducible);
  REQUIRE(w2.split.has_value());
  CHECK(w2.split->factors.size() == 2);

  auto w3 = is_irreducible_over_QT(X * X - T);
  CHECK(w3.irreducible);
  CHECK(*w3.witness_t == rat(-1));  // t = 0, 1 give rational squares
}
