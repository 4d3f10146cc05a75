#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "regal/errors.hpp"
#include "regal/tower.hpp"

using namespace regal;

static QPoly P(std::vector<long> c) { return QPoly::from_int_coeffs(c); }

TEST_CASE("automorphism groups of quadratic and cubic fields") {
  auto q2 = AbsField::make(P({-2, 0, 1}), "r");
  AutGroup a2 = automorphism_group(q2);
  CHECK(a2.order() == 2);
  CHECK(is_isomorphic(a2.group, FiniteGroup::cyclic(2)).has_value());

  // the real cubic field Q(cbrt2) admits no nontrivial automorphism
  auto c2 = AbsField::make(P({-2, 0, 0, 1}), "c");
  AutGroup a3 = automorphism_group(c2);
  CHECK(a3.order() == 1);
}

TEST_CASE("relative automorphisms over Q(zeta3)") {
  // L = Q(zeta3, cbrt2) has order-3 automorphism group over Q(zeta3)
  auto zf = AbsField::make(P({1, 1, 1}), "w");
  auto ext = adjoin_root(zf, kp_from_qpoly(zf, P({-2, 0, 0, 1})), "c");
  CHECK(ext.field->degree() == 6);
  FElem zeta(ext.field, ext.old_gen_image);
  AutGroup rel = automorphism_group(ext.field, {zeta});
  CHECK(rel.order() == 3);
  CHECK(is_isomorphic(rel.group, FiniteGroup::cyclic(3)).has_value());
  // over Q the same field is Galois with group S3
  AutGroup full = automorphism_group(ext.field);
  CHECK(full.order() == 6);
  CHECK(is_isomorphic(full.group, FiniteGroup::symmetric(3)).has_value());
}

TEST_CASE("splitting fields of cubics") {
  SplittingField sf = splitting_field(P({-2, 0, 0, 1}));  // X^3 - 2
  CHECK(sf.field->degree() == 6);
  CHECK(sf.roots.size() == 3);
  CHECK(P({-2, 0, 0, 1}).discriminant() == rat(-108));
  AutGroup g = galois_group(sf);
  CHECK(g.order() == 6);
  CHECK(is_isomorphic(g.group, FiniteGroup::symmetric(3)).has_value());

  SplittingField s2 = splitting_field(P({-2, 0, 1}));  // X^2 - 2: already normal
  CHECK(s2.field->degree() == 2);
  AutGroup g2 = galois_group(s2);
  CHECK(g2.order() == 2);

  SplittingField s3 = splitting_field(P({1, 1, 0, 1}));  // X^3 + X + 1, disc -31
  CHECK(s3.field->degree() == 6);
  CHECK(is_isomorphic(galois_group(s3).group, FiniteGroup::symmetric(3)).has_value());
}

TEST_CASE("splitting field of a biquadratic quartic") {
  // X^4 - 10X^2 + 1 = minpoly of sqrt2 + sqrt3; Galois with group V4
  SplittingField sf = splitting_field(P({1, 0, -10, 0, 1}));
  CHECK(sf.field->degree() == 4);
  CHECK(sf.roots.size() == 4);
  AutGroup g = galois_group(sf);
  CHECK(g.order() == 4);
  CHECK(is_isomorphic(g.group, FiniteGroup::from_literal("V4")).has_value());
}

TEST_CASE("cyclic quartic: C4 is distinguished from V4") {
  // X^4 + X^3 + X^2 + X + 1 (5th cyclotomic): Galois group C4
  SplittingField sf = splitting_field(P({1, 1, 1, 1, 1}));
  CHECK(sf.field->degree() == 4);
  AutGroup g = galois_group(sf);
  CHECK(is_isomorphic(g.group, FiniteGroup::cyclic(4)).has_value());
  CHECK(!is_isomorphic(g.group, FiniteGroup::from_literal("V4")).has_value());
}

TEST_CASE("subfield membership and minimal polynomials") {
  SplittingField sf = splitting_field(P({-2, 0, 0, 1}));
  // Q(cbrt2) inside the splitting field via the least root
  auto l = AbsField::make(P({-2, 0, 0, 1}), "c");
  Subfield sub{l, sf.roots[0]};
  CHECK(to_subfield(sub, sf.roots[0]).has_value());
  CHECK(to_subfield(sub, sf.roots[0] * sf.roots[0]).has_value());
  CHECK(!to_subfield(sub, sf.roots[1]).has_value());  // conjugate root is outside
  CHECK(minpoly_of(sf.roots[0]) == P({-2, 0, 0, 1}));
  CHECK(minpoly_of(FElem::from_rat(sf.field, 5)) == P({-5, 1}));
}

TEST_CASE("restriction maps") {
  SplittingField sf = splitting_field(P({-2, 0, 0, 1}));
  AutGroup g = galois_group(sf);
  auto l = AbsField::make(P({-2, 0, 0, 1}), "c");
  Subfield sub{l, sf.roots[0]};
  AutGroup aut_l = automorphism_group(l);
  RestrictionMap rm = restriction_map(g, sub, aut_l);
  // the setwise stabilizer of the non-normal cubic is the order-2 stabilizer
  CHECK(rm.domain.size() == 2);
  for (int s : rm.domain) CHECK(rm.map[static_cast<std::size_t>(s)] == 0);  // image trivial

  // restricting the full group to the whole field is the identity map
  Subfield self{sf.field, FElem::generator(sf.field)};
  RestrictionMap rid = restriction_map(g, self, g);
  CHECK(rid.domain.size() == static_cast<std::size_t>(g.order()));
  for (int s = 0; s < g.order(); ++s) CHECK(rid.map[static_cast<std::size_t>(s)] == s);
}

TEST_CASE("normalizer model") {
  CHECK(normalizer_model_check(AbsField::make(P({-2, 0, 0, 1}), "c")));  // Q(cbrt2)
  CHECK(normalizer_model_check(AbsField::make(P({-2, 0, 1}), "r")));     // Galois case
  CHECK(normalizer_model_check(AbsField::make(P({-2, 0, 0, 0, 1}), "t")));  // X^4-2
}

TEST_CASE("linear disjointness") {
  // Q(cbrt2) and Q(zeta3) inside the degree-6 splitting field
  SplittingField sf = splitting_field(P({-2, 0, 0, 1}));
  FElem c = sf.roots[0];
  // zeta3 = root ratio: r2/r1 has minimal polynomial X^2 + X + 1
  FElem zeta = sf.roots[1] / sf.roots[0];
  CHECK(minpoly_of(zeta) == P({1, 1, 1}));
  CHECK(linear_disjointness_check(c, zeta));
  CHECK(!linear_disjointness_check(c, c * rat(2)));  // same field twice

  // sqrt2 and sqrt3 in Q(sqrt2, sqrt3)
  SplittingField bq = splitting_field(P({1, 0, -10, 0, 1}));
  // recover sqrt2 = (theta^3 - 9 theta)/2 for theta = sqrt2+sqrt3
  FElem theta = sf.roots[0];  // placeholder; use bq roots below
  FElem t = bq.roots.back();
  FElem s2 = (t * t * t - t * rat(9)) * rat(1, 2);
  CHECK(minpoly_of(s2) == P({-2, 0, 1}));
  FElem s3 = t - s2;
  CHECK(minpoly_of(s3) == P({-3, 0, 1}));
  CHECK(linear_disjointness_check(s2, s3));
  (void)theta;
}

TEST_CASE("fixed fields of the S3 splitting field") {
  SplittingField sf = splitting_field(P({-2, 0, 0, 1}));
  AutGroup g = galois_group(sf);
  // full group -> Q
  std::vector<int> all(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) all[static_cast<std::size_t>(i)] = i;
  Subfield fq = fixed_field(g, all, "u");
  CHECK(fq.field->degree() == 1);
  // trivial subgroup -> the whole field
  Subfield ff = fixed_field(g, {0}, "u");
  CHECK(ff.field->degree() == 6);
  // an order-2 subgroup -> a cubic subfield with the same splitting field
  int invol = -1;
  for (int i = 1; i < g.order(); ++i)
    if (g.group.element_order(i) == 2) { invol = i; break; }
  Subfield cubic = fixed_field(g, g.group.closure({invol}), "u");
  CHECK(cubic.field->degree() == 3);
  // the order-3 subgroup -> the quadratic resolvent Q(sqrt(-3))
  int three = -1;
  for (int i = 1; i < g.order(); ++i)
    if (g.group.element_order(i) == 3) { three = i; break; }
  Subfield quad = fixed_field(g, g.group.closure({three}), "u");
  CHECK(quad.field->degree() == 2);
  Rat d = quad.field->minpoly.discriminant();
  CHECK(!rat_is_square(d));
  // disc is -3 times a square exactly when the field is Q(sqrt(-3))
  CHECK(rat_is_square(d / rat(-3)));
}

TEST_CASE("coefficient descent") {
  BiPoly X = BiPoly::X(), T = BiPoly::T();

  auto ft = [](std::vector<QPoly> cs) {
    FTPoly p;
    for (auto& c : cs) p.emplace_back(c);
    return p;
  };

  // E = M(sqrt2): conjugates x, -x; everything rational
  DescentInput in1;
  in1.minpoly = X * X - BiPoly::from_qpoly_in_T(P({2}));
  in1.conjugates = {ft({P({0}), P({1})}), ft({P({0}), P({-1})})};
  in1.generator_expr = ft({P({0}), P({1})});
  DescentResult r1 = coefficient_descent(in1);
  CHECK(r1.field_of_definition == "Q");

  // E = M(sqrt s): the defining polynomial itself uses s
  DescentInput in2;
  in2.minpoly = X * X - T;
  in2.conjugates = {ft({P({0}), P({1})}), ft({P({0}), P({-1})})};
  in2.generator_expr = ft({P({0}), P({1})});
  CHECK(coefficient_descent(in2).field_of_definition == "Q(s)");

  // theta^2 = 2s + 3
  DescentInput in3;
  in3.minpoly = X * X - BiPoly::from_qpoly_in_T(P({3, 2}));
  in3.conjugates = {ft({P({0}), P({1})}), ft({P({0}), P({-1})})};
  in3.generator_expr = ft({P({0}), P({1})});
  CHECK(coefficient_descent(in3).field_of_definition == "Q(s)");

  // a non-root expression is rejected
  DescentInput bad = in1;
  bad.conjugates[1] = ft({P({1}), P({1})});  // x + 1 is not a conjugate
  CHECK_THROWS_AS(coefficient_descent(bad), Error);
}
