#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "regal/qfactor.hpp"

using namespace regal;

static QPoly P(std::vector<long> c) { return QPoly::from_int_coeffs(c); }

TEST_CASE("squarefree decomposition") {
  // (X-1)^2 (X^2+X+1)^2 = X^6 - 2X^3 + 1
  QPoly f = P({1, 0, 0, -2, 0, 0, 1});
  auto parts = squarefree_decomposition(f);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].second == 2);
  CHECK(parts[0].first == P({-1, 0, 0, 1}).monic());  // X^3 - 1
}

TEST_CASE("factorization of X^4 - 1") {
  auto fl = factor_over_Q(P({-1, 0, 0, 0, 1}));
  REQUIRE(fl.factors.size() == 3);
  CHECK(fl.unit == rat(1));
  CHECK(fl.factors[0].first == P({-1, 1}));
  CHECK(fl.factors[1].first == P({1, 1}));
  CHECK(fl.factors[2].first == P({1, 0, 1}));
  for (auto& [g, m] : fl.factors) CHECK(m == 1);
  CHECK(fl.product() == P({-1, 0, 0, 0, 1}));
}

TEST_CASE("factorization with multiplicities") {
  QPoly f = P({1, 0, 0, -2, 0, 0, 1});  // (X-1)^2 (X^2+X+1)^2
  auto fl = factor_over_Q(f);
  REQUIRE(fl.factors.size() == 2);
  CHECK(fl.factors[0].first == P({-1, 1}));
  CHECK(fl.factors[0].second == 2);
  CHECK(fl.factors[1].first == P({1, 1, 1}));
  CHECK(fl.factors[1].second == 2);
  CHECK(fl.product() == f);
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible_over_Q(P({-2, 0, 0, 1})));   // X^3 - 2
  CHECK(is_irreducible_over_Q(P({1, 1, 0, 1})));    // X^3 + X + 1
  CHECK(is_irreducible_over_Q(P({1, -1, 0, 0, 1})));  // X^4 - X + 1
  CHECK(!is_irreducible_over_Q(P({-1, 0, 1})));
  CHECK(!is_irreducible_over_Q(P({0, 1, 1})));       // X(X+1)
  // cyclotomic Phi_12 = X^4 - X^2 + 1
  CHECK(is_irreducible_over_Q(P({1, 0, -1, 0, 1})));
}

TEST_CASE("non-monic and rational-coefficient inputs") {
  QPoly f = P({-2, 0, 4});  // 4X^2 - 2 = 4(X^2 - 1/2)
  auto fl = factor_over_Q(f);
  CHECK(fl.product() == f);
  REQUIRE(fl.factors.size() == 1);
  CHECK(fl.unit == rat(4));

  QPoly g = QPoly({rat(-1, 2), rat(0), rat(1, 2)});  // (X^2-1)/2
  auto gl = factor_over_Q(g);
  CHECK(gl.unit == rat(1, 2));
  REQUIRE(gl.factors.size() == 2);
  CHECK(gl.product() == g);
}

TEST_CASE("larger factorizations") {
  // X^6 - 1 = (X-1)(X+1)(X^2+X+1)(X^2-X+1)
  auto fl = factor_over_Q(P({-1, 0, 0, 0, 0, 0, 1}));
  CHECK(fl.factors.size() == 4);
  CHECK(fl.product() == P({-1, 0, 0, 0, 0, 0, 1}));

  // Swinnerton-Dyer style: minimal polynomial of sqrt(2)+sqrt(3),
  // X^4 - 10X^2 + 1, irreducible over Q but reducible mod every prime.
  CHECK(is_irreducible_over_Q(P({1, 0, -10, 0, 1})));

  // (X^2 - 2)(X^2 - 3)(X^2 + 1)
  QPoly f = P({1, 0, -2}) * rat(-1);  // keep construction explicit below
  QPoly a = P({-2, 0, 1}), b = P({-3, 0, 1}), c = P({1, 0, 1});
  auto gl = factor_over_Q(a * b * c);
  REQUIRE(gl.factors.size() == 3);
  // same degree, so sorted by coefficients: constant terms -3 < -2 < 1
  CHECK(gl.factors[0].first == b);
  CHECK(gl.factors[1].first == a);
  CHECK(gl.factors[2].first == c);
  (void)f;
}

TEST_CASE("rational squares") {
  CHECK(rat_is_square(rat(4)));
  CHECK(rat_is_square(rat(9, 16)));
  CHECK(rat_is_square(rat(0)));
  CHECK(!rat_is_square(rat(2)));
  CHECK(!rat_is_square(rat(-4)));
  CHECK(!rat_is_square(rat(8, 9)));
}
