#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "regal/errors.hpp"
#include "regal/numfield.hpp"

using namespace regal;

static QPoly P(std::vector<long> c) { return QPoly::from_int_coeffs(c); }

TEST_CASE("field element arithmetic in Q(sqrt2)") {
  auto k = AbsField::make(P({-2, 0, 1}), "r");  // r^2 = 2
  FElem r = FElem::generator(k);
  CHECK((r * r).to_rat() == rat(2));
  FElem a = r + FElem::from_rat(k, 1);  // 1 + r
  FElem b = a.inv();                    // 1/(1+r) = r - 1
  CHECK((a * b).to_rat() == rat(1));
  CHECK(b == r - FElem::from_rat(k, 1));
  CHECK_THROWS_AS(FElem::from_rat(k, 0).inv(), Error);
  CHECK_THROWS_AS(r.to_rat(), Error);
}

TEST_CASE("invalid fields rejected") {
  CHECK_THROWS_AS(AbsField::make(P({-1, 0, 1}), "x"), Error);  // reducible
  CHECK_THROWS_AS(AbsField::make(P({-2, 0, 2}), "x"), Error);  // not monic
}

TEST_CASE("factoring over Q(sqrt2)") {
  auto k = AbsField::make(P({-2, 0, 1}), "r");
  // X^2 - 2 = (X - r)(X + r) over Q(r)
  auto fl = factor_over_number_field(k, kp_from_qpoly(k, P({-2, 0, 1})));
  REQUIRE(fl.factors.size() == 2);
  CHECK(kp_deg(fl.factors[0].first) == 1);
  CHECK(kp_deg(fl.factors[1].first) == 1);
  auto roots = roots_in_field(k, kp_from_qpoly(k, P({-2, 0, 1})));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == -FElem::generator(k));
  CHECK(roots[1] == FElem::generator(k));

  // X^2 - 3 stays irreducible over Q(r)
  CHECK(is_irreducible_over_field(k, kp_from_qpoly(k, P({-3, 0, 1}))));
  // X^2 + 1 stays irreducible (Q(sqrt2) is real)
  CHECK(is_irreducible_over_field(k, kp_from_qpoly(k, P({1, 0, 1}))));
}

TEST_CASE("factoring over Q(cbrt2)") {
  auto k = AbsField::make(P({-2, 0, 0, 1}), "c");  // c^3 = 2
  // X^3 - 2 = (X - c) * (irreducible quadratic) over Q(c)
  auto fl = factor_over_number_field(k, kp_from_qpoly(k, P({-2, 0, 0, 1})));
  REQUIRE(fl.factors.size() == 2);
  CHECK(kp_deg(fl.factors[0].first) == 1);
  CHECK(kp_deg(fl.factors[1].first) == 2);
  auto roots = roots_in_field(k, kp_from_qpoly(k, P({-2, 0, 0, 1})));
  REQUIRE(roots.size() == 1);  // only the real generator root
  CHECK(roots[0] == FElem::generator(k));
}

TEST_CASE("multiplicities over a number field") {
  auto k = AbsField::make(P({-2, 0, 1}), "r");
  FElem r = FElem::generator(k);
  // (X - r)^2 (X + 1)
  KPoly lin1{-r, FElem::from_rat(k, 1)};
  KPoly lin2{FElem::from_rat(k, 1), FElem::from_rat(k, 1)};
  KPoly f = kp_mul(kp_mul(lin1, lin1), lin2);
  auto fl = factor_over_number_field(k, f);
  REQUIRE(fl.factors.size() == 2);
  int total = 0;
  for (auto& [g, m] : fl.factors) total += m * kp_deg(g);
  CHECK(total == 3);
  bool saw_double = false;
  for (auto& [g, m] : fl.factors) saw_double = saw_double || m == 2;
  CHECK(saw_double);
}

TEST_CASE("adjoin a root: Q(sqrt2, sqrt3)") {
  auto k = AbsField::make(P({-2, 0, 1}), "r");
  auto ext = adjoin_root(k, kp_from_qpoly(k, P({-3, 0, 1})), "g");
  CHECK(ext.field->degree() == 4);
  // images satisfy their defining equations
  FElem theta(ext.field, ext.old_gen_image);
  FElem x(ext.field, ext.root_image);
  CHECK((theta * theta).to_rat() == rat(2));
  CHECK((x * x).to_rat() == rat(3));
  // embedded elements multiply consistently
  FElem two = embed_elem(FElem::generator(k) * FElem::generator(k), ext);
  CHECK(two.to_rat() == rat(2));
  // sqrt6 = theta * x has minimal polynomial X^2 - 6
  FElem s6 = theta * x;
  CHECK((s6 * s6).to_rat() == rat(6));
}

TEST_CASE("adjoining a linear root stays in the field") {
  auto k = AbsField::make(P({-2, 0, 1}), "r");
  FElem r = FElem::generator(k);
  KPoly lin{-r, FElem::from_rat(k, 1)};  // X - r
  auto ext = adjoin_root(k, lin, "g");
  CHECK(ext.field->degree() == 2);
  CHECK(FElem(ext.field, ext.root_image) == r);
}

TEST_CASE("embeddings between fields") {
  auto q2 = AbsField::make(P({-2, 0, 1}), "r");
  auto q4 = AbsField::make(P({-2, 0, 0, 0, 1}), "t");  // t^4 = 2
  auto embs = embeddings(q2, q4);
  REQUIRE(embs.size() == 2);  // r -> ±t^2
  for (const auto& e : embs) CHECK((e * e).to_rat() == rat(2));

  auto q3 = AbsField::make(P({-3, 0, 1}), "s");
  CHECK(embeddings(q3, q4).empty());
}

TEST_CASE("degree caps") {
  auto k = AbsField::make(P({-2, 0, 1}), "r");
  CHECK_THROWS_AS(adjoin_root(k, kp_from_qpoly(k, P({-3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1})), "g"),
                  Error);  // 2*13 = 26 > 24
}
