#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "regal/errors.hpp"
#include "regal/expr.hpp"
#include "regal/special.hpp"

using namespace regal;

TEST_CASE("monic integral rescaling") {
  CHECK(monic_integral_model(parse_bipoly("X^3 + T*X + T")) ==
        parse_bipoly("X^3 + T*X + T"));
  // 2X^2 + TX + 1 -> X^2 + TX + 2 (roots doubled, now integral over Q[T])
  CHECK(monic_integral_model(parse_bipoly("2*X^2 + T*X + 1")) ==
        parse_bipoly("X^2 + T*X + 2"));
  // cubic with constant leading coefficient 4: a_i * 4^{2-i}
  CHECK(monic_integral_model(parse_bipoly("4*X^3 + X + T")) ==
        parse_bipoly("X^3 + 4*X + 16*T"));
  CHECK_THROWS_WITH_AS(monic_integral_model(BiPoly{}), doctest::Contains("zero"),
                       Error);
}

TEST_CASE("accepted specialization of the trinomial at t = 1") {
  BiPoly f = parse_bipoly("X^3 + T*X + T");
  SpecializationReport rep = specialize(f, rat(1), 6);
  CHECK(rep.specialized == QPoly::from_int_coeffs({1, 1, 0, 1}));
  CHECK(rep.full_degree);
  CHECK(rep.separable);
  CHECK(rep.irreducible);
  CHECK(rep.closure_degree == 6);  // disc = -31, not a square
  CHECK(rep.degree_preserved);
  CHECK(rep.accepted);
  REQUIRE(rep.ehat_t);
  CHECK(rep.ehat_t->degree() == 6);
  CHECK(rep.roots.size() == 3);
}

TEST_CASE("degree-preservation guard") {
  BiPoly f = parse_bipoly("X^3 + T*X + T");
  SpecializationReport rep = specialize(f, rat(1), 3);
  CHECK(rep.irreducible);
  CHECK(rep.closure_degree == 6);
  CHECK_FALSE(rep.degree_preserved);
  CHECK_FALSE(rep.accepted);
}

TEST_CASE("degraded specializations carry a factorization") {
  SpecializationReport sq = specialize(parse_bipoly("X^2 - T"), rat(4));
  CHECK(sq.full_degree);
  CHECK(sq.separable);
  CHECK_FALSE(sq.irreducible);
  CHECK_FALSE(sq.accepted);
  REQUIRE(sq.factorization.factors.size() == 2);
  CHECK(sq.factorization.factors[0].first == QPoly::from_int_coeffs({-2, 1}));
  CHECK(sq.factorization.factors[1].first == QPoly::from_int_coeffs({2, 1}));

  SpecializationReport insep = specialize(parse_bipoly("X^3 + T*X + T"), rat(0));
  CHECK(insep.full_degree);
  CHECK_FALSE(insep.separable);
  CHECK_FALSE(insep.accepted);
  REQUIRE(insep.factorization.factors.size() == 1);
  CHECK(insep.factorization.factors[0].second == 3);
}

TEST_CASE("hilbert search walks the canonical order and logs rejections") {
  HilbertResult one = hilbert_search({parse_bipoly("X^2 - T")});
  CHECK(one.t == rat(-1));  // 0 inseparable, 1 splits, -1 gives X^2 + 1
  REQUIRE(one.rejections.size() == 2);
  CHECK(one.rejections[0].t == rat(0));
  CHECK(one.rejections[1].t == rat(1));

  HilbertResult both =
      hilbert_search({parse_bipoly("X^2 - T"), parse_bipoly("X^3 + T*X + T")});
  CHECK(both.t == rat(-1));

  // X^2 - T^2 factors at every rational point
  CHECK_THROWS_WITH_AS(hilbert_search({parse_bipoly("X^2 - T^2")}, 3),
                       doctest::Contains("BudgetExhausted"), Error);
}

TEST_CASE("constant-extension witnesses") {
  BiPoly f = parse_bipoly("X^2 - T");
  auto over_q = constant_extension_witness(AbsField::rationals(), f);
  REQUIRE(over_q);
  CHECK(*over_q == rat(-1));
  // over Q(i) the points -1 and 1 both fail; 2 stays irreducible
  auto qi = AbsField::make(QPoly::from_int_coeffs({1, 0, 1}), "i");
  auto over_qi = constant_extension_witness(qi, f);
  REQUIRE(over_qi);
  CHECK(*over_qi == rat(2));
  // X^2 + T^2 = (X + iT)(X - iT): no witness exists over Q(i)
  CHECK_FALSE(constant_extension_witness(qi, parse_bipoly("X^2 + T^2"), 10));
}

TEST_CASE("constant-field battery") {
  CHECK(regularity_battery().size() == 7);

  RegularityVerdict good = regularity_spot_check(parse_bipoly("X^3 + T*X + T"));
  CHECK(good.proxy_regular);
  CHECK(good.fields.size() == 7);
  for (const auto& item : good.fields) CHECK(item.ok);

  RegularityVerdict extra = regularity_spot_check(
      parse_bipoly("X^3 + T*X + T"), {QPoly::from_int_coeffs({-2, 0, 1})});
  CHECK(extra.proxy_regular);
  CHECK(extra.fields.size() == 8);

  // constants appear over Q(i): the Q(i) entry must fail
  RegularityVerdict bad =
      regularity_spot_check(parse_bipoly("X^2 + T^2"), {}, 10);
  CHECK_FALSE(bad.proxy_regular);
  CHECK(bad.fields[0].name == "Q[a]/(a^2 + 1)");
  CHECK_FALSE(bad.fields[0].ok);
}

TEST_CASE("reports are deterministic") {
  BiPoly f = parse_bipoly("X^3 + T*X + T");
  SpecializationReport a = specialize(f, rat(1), 6);
  SpecializationReport b = specialize(f, rat(1), 6);
  CHECK(a.specialized == b.specialized);
  CHECK(a.ehat_t->minpoly == b.ehat_t->minpoly);
  CHECK(a.roots.size() == b.roots.size());
  for (std::size_t i = 0; i < a.roots.size(); ++i)
    CHECK(a.roots[i].rep() == b.roots[i].rep());
}
