#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "regal/embed.hpp"
#include "regal/errors.hpp"
#include "regal/tower.hpp"

using namespace regal;

namespace {

std::shared_ptr<const AbsField> sqrt_field(long d, const std::string& label) {
  return AbsField::make(QPoly::from_int_coeffs({-d, 0, 1}), label);
}

// Deterministic brute force over maps source -> target with map[0] = 0.
std::optional<std::vector<int>> find_hom(
    const FiniteGroup& s, const FiniteGroup& t,
    const std::function<bool(const GroupHom&)>& pred) {
  std::vector<int> m(static_cast<std::size_t>(s.order), 0);
  std::function<bool(int)> go = [&](int i) -> bool {
    if (i == s.order) {
      GroupHom h{s, t, m};
      return h.is_hom() && pred(h);
    }
    for (int c = 0; c < t.order; ++c) {
      m[static_cast<std::size_t>(i)] = c;
      if (go(i + 1)) return true;
    }
    m[static_cast<std::size_t>(i)] = 0;
    return false;
  };
  if (go(1)) return m;
  return std::nullopt;
}

// First isomorphism beta: aut_e.group -> g with alpha(beta(s)) = res(s).
std::vector<int> find_commuting_beta(const AutGroup& aut_e, const GroupHom& alpha,
                                     const std::vector<int>& res) {
  auto found = find_hom(aut_e.group, alpha.source, [&](const GroupHom& h) {
    if (!h.is_injective() || !h.is_surjective()) return false;
    for (int s = 0; s < h.source.order; ++s)
      if (alpha(h(s)) != res[static_cast<std::size_t>(s)]) return false;
    return true;
  });
  REQUIRE(found);
  return *found;
}

std::vector<int> restriction_of(const AutGroup& aut_e,
                                const std::shared_ptr<const AbsField>& l,
                                const FElem& l_in_e) {
  AutGroup aut_l = l->is_rational()
                       ? AutGroup{l, FiniteGroup::trivial(), {FElem::generator(l)}}
                       : automorphism_group(l);
  RestrictionMap rm = restriction_map(aut_e, Subfield{l, l_in_e}, aut_l);
  REQUIRE(rm.domain.size() == static_cast<std::size_t>(aut_e.order()));
  return rm.map;
}

}  // namespace

TEST_CASE("problem construction and splitness") {
  EmbeddingProblem triv = trivial_problem(FiniteGroup::symmetric(3));
  CHECK(triv.aut.order() == 1);
  CHECK(is_split(triv));  // any map onto the trivial group splits

  auto l = sqrt_field(2, "r");
  EmbeddingProblem iso = make_problem(FiniteGroup::cyclic(2), l, {0, 1});
  CHECK(iso.aut.order() == 2);
  CHECK(is_split(iso));

  CHECK_THROWS_WITH_AS(make_problem(FiniteGroup::cyclic(2), l, {0, 0}),
                       doctest::Contains("NotEpimorphism"), Error);
  CHECK_THROWS_AS(make_problem(FiniteGroup::cyclic(2), l, {0, 1, 0}), Error);
}

TEST_CASE("verification: trivial problem solved by a quadratic field") {
  SolutionCertificate cert;
  cert.problem = trivial_problem(FiniteGroup::cyclic(2));
  cert.e = sqrt_field(2, "r");
  cert.l_in_e = FElem::from_rat(cert.e, 0);
  AutGroup aut_e = automorphism_group(cert.e);
  cert.beta = GroupHom{aut_e.group, cert.problem.g,
                       find_commuting_beta(aut_e, cert.problem.alpha,
                                           restriction_of(aut_e, cert.problem.l,
                                                          cert.l_in_e))};
  VerificationReport rep = verify_solution(cert);
  CHECK(rep.pass);
  REQUIRE(rep.checks.size() == 5);
  CHECK(rep.checks[0].name == "embedding");
  CHECK(rep.checks[4].name == "regularity");
  CHECK(rep.checks[4].detail == "not a function-field solution");

  // tamper: beta no longer a homomorphism
  SolutionCertificate bad = cert;
  bad.beta.map = {1, 0};
  VerificationReport brep = verify_solution(bad);
  CHECK_FALSE(brep.pass);
  CHECK(brep.failing == "beta-bijective");

  // tamper: solution field with the wrong automorphism count
  SolutionCertificate wrong = cert;
  wrong.e = AbsField::make(QPoly::from_int_coeffs({-2, 0, 0, 1}), "c");
  wrong.l_in_e = FElem::from_rat(wrong.e, 0);
  VerificationReport wrep = verify_solution(wrong);
  CHECK_FALSE(wrep.pass);
  CHECK(wrep.failing == "beta-bijective");
}

TEST_CASE("verification: identity problem over Q(sqrt 2)") {
  auto l = sqrt_field(2, "r");
  SolutionCertificate cert;
  cert.problem = make_problem(FiniteGroup::cyclic(2), l, {0, 1});
  cert.e = l;
  cert.l_in_e = FElem::generator(l);
  AutGroup aut_e = automorphism_group(l);
  cert.beta = GroupHom{aut_e.group, cert.problem.g,
                       find_commuting_beta(aut_e, cert.problem.alpha,
                                           restriction_of(aut_e, l, cert.l_in_e))};
  VerificationReport rep = verify_solution(cert);
  CHECK(rep.pass);

  // the embedding image must actually be a root of L's polynomial
  SolutionCertificate bad = cert;
  bad.l_in_e = FElem::from_rat(l, 1);
  VerificationReport brep = verify_solution(bad);
  CHECK_FALSE(brep.pass);
  CHECK(brep.failing == "embedding");
}

TEST_CASE("verification: commutation is checked element-wise") {
  auto l = sqrt_field(2, "r");
  AutGroup aut_l = automorphism_group(l);
  FiniteGroup v4 = FiniteGroup::from_literal("V4");
  auto alpha = find_hom(v4, aut_l.group, [](const GroupHom& h) {
    return h.is_surjective();
  });
  REQUIRE(alpha);
  EmbeddingProblem ep = make_problem(v4, l, *alpha);

  AdjoinResult ext = adjoin_root(l, kp_from_qpoly(l, QPoly::from_int_coeffs({-3, 0, 1})), "s");
  SolutionCertificate cert;
  cert.problem = ep;
  cert.e = ext.field;
  cert.l_in_e = FElem(ext.field, ext.old_gen_image);
  AutGroup aut_e = automorphism_group(cert.e);
  std::vector<int> res = restriction_of(aut_e, l, cert.l_in_e);
  cert.beta = GroupHom{aut_e.group, v4,
                       find_commuting_beta(aut_e, ep.alpha, res)};
  VerificationReport rep = verify_solution(cert);
  CHECK(rep.pass);

  // an isomorphism that ignores the restriction must fail check (d)
  auto rogue = find_hom(aut_e.group, v4, [&](const GroupHom& h) {
    if (!h.is_injective() || !h.is_surjective()) return false;
    for (int s = 0; s < h.source.order; ++s)
      if (ep.alpha(h(s)) != res[static_cast<std::size_t>(s)]) return true;
    return false;
  });
  REQUIRE(rogue);
  SolutionCertificate bad = cert;
  bad.beta.map = *rogue;
  VerificationReport brep = verify_solution(bad);
  CHECK_FALSE(brep.pass);
  CHECK(brep.failing == "commutation");
}

TEST_CASE("base change to the rational function field") {
  auto l = sqrt_field(2, "r");
  EmbeddingProblem ep = make_problem(FiniteGroup::cyclic(2), l, {0, 1});
  BaseChangeResult bc = base_change_to_function_field(ep);
  CHECK(bc.function_field);
  CHECK(bc.lm == ep.l);
  CHECK(bc.res_iso.map == std::vector<int>{0, 1});
  CHECK(bc.alpha_m.map == ep.alpha.map);
}

TEST_CASE("base change to a disjoint quadratic field") {
  auto l = sqrt_field(2, "r");
  EmbeddingProblem ep = make_problem(FiniteGroup::cyclic(2), l, {0, 1});
  BaseChangeResult bc = base_change(ep, sqrt_field(3, "s"));
  CHECK(bc.lm->degree() == 4);
  CHECK(bc.aut_lm.order() == 2);  // Aut(LM/M)
  CHECK(bc.res_iso.is_injective());
  CHECK(bc.res_iso.is_surjective());
  // the transported problem matches through the restriction isomorphism
  for (int x = 0; x < ep.g.order; ++x)
    CHECK(bc.res_iso(bc.alpha_m(x)) == ep.alpha(x));
  // M's generator really is fixed: sqrt(3) has a quadratic minimal polynomial
  CHECK(minpoly_of(bc.m_in_lm) == QPoly::from_int_coeffs({-3, 0, 1}));
}

TEST_CASE("base change rejects entangled constants") {
  auto l = AbsField::make(QPoly::from_int_coeffs({-2, 0, 0, 1}), "c");
  EmbeddingProblem ep = make_problem(FiniteGroup::trivial(), l, {0});
  auto zeta3 = AbsField::make(QPoly::from_int_coeffs({1, 1, 1}), "w");
  CHECK_THROWS_WITH_AS(base_change(ep, zeta3),
                       doctest::Contains("NotLinearlyDisjoint"), Error);
  // a quadratic with nothing in common with the closure passes
  BaseChangeResult ok = base_change(ep, sqrt_field(5, "s"));
  CHECK(ok.lm->degree() == 6);
}

TEST_CASE("fiber-product reduction over a Galois dominator") {
  // sign problem for S3 over Q(sqrt 2), dominated by L' = L
  auto l = sqrt_field(2, "r");
  AutGroup aut_l = automorphism_group(l);
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  auto alpha = find_hom(s3, aut_l.group, [](const GroupHom& h) {
    return h.is_surjective();
  });
  REQUIRE(alpha);
  EmbeddingProblem ep = make_problem(s3, l, *alpha);
  ReductionPackage pkg =
      reduce_via_fiber_product(ep, l, FElem::generator(l));
  CHECK(pkg.fp.group.order == 6);
  CHECK(is_isomorphic(pkg.fp.group, s3));
  CHECK(pkg.alpha_prime.is_surjective());
  CHECK(kernel_of_first_projection(pkg.fp).size() == 1);  // Gal(L'/L) trivial
  CHECK(pkg.delta.map.size() == 2);

  // non-Galois dominators are rejected
  auto cube = AbsField::make(QPoly::from_int_coeffs({-2, 0, 0, 1}), "c");
  EmbeddingProblem triv = trivial_problem(FiniteGroup::cyclic(2));
  CHECK_THROWS_WITH_AS(
      reduce_via_fiber_product(triv, cube, FElem::generator(cube)),
      doctest::Contains("NotGalois"), Error);
}

TEST_CASE("push a split solution down through the fiber product") {
  EmbeddingProblem ep = trivial_problem(FiniteGroup::cyclic(2));
  auto lp = sqrt_field(2, "r");
  ReductionPackage pkg =
      reduce_via_fiber_product(ep, lp, FElem::from_rat(lp, 0));
  CHECK(pkg.fp.group.order == 4);

  // solve the reduced problem with E = Q(sqrt 2, sqrt 3)
  AdjoinResult ext = adjoin_root(lp, kp_from_qpoly(lp, QPoly::from_int_coeffs({-3, 0, 1})), "s");
  SolutionCertificate cp;
  cp.problem = make_problem(pkg.fp.group, lp, pkg.alpha_prime.map);
  cp.e = ext.field;
  cp.l_in_e = FElem(ext.field, ext.old_gen_image);
  AutGroup aut_e = automorphism_group(cp.e);
  cp.beta = GroupHom{aut_e.group, pkg.fp.group,
                     find_commuting_beta(aut_e, pkg.alpha_prime,
                                         restriction_of(aut_e, lp, cp.l_in_e))};
  CHECK(verify_solution(cp).pass);

  SolutionCertificate down = push_solution(pkg, cp);
  CHECK(down.e->degree() == 2);
  VerificationReport rep = verify_solution(down);
  CHECK(rep.pass);
  // E' is one of the two quadratic subfields complementing Q(sqrt 2)
  bool has3 = !roots_in_field(down.e, kp_from_qpoly(down.e, QPoly::from_int_coeffs({-3, 0, 1}))).empty();
  bool has6 = !roots_in_field(down.e, kp_from_qpoly(down.e, QPoly::from_int_coeffs({-6, 0, 1}))).empty();
  CHECK((has3 || has6));

  // a tampered upstream certificate is refused
  SolutionCertificate broken = cp;
  broken.beta.map[1] = broken.beta.map[2];
  CHECK_THROWS_WITH_AS(push_solution(pkg, broken),
                       doctest::Contains("UpstreamUnverified"), Error);

  // determinism: the pushed certificate is byte-stable
  SolutionCertificate again = push_solution(pkg, cp);
  CHECK(certificate_to_json_text(down) == certificate_to_json_text(again));
}

TEST_CASE("certificate JSON round trip") {
  auto l = sqrt_field(2, "r");
  SolutionCertificate cert;
  cert.problem = make_problem(FiniteGroup::cyclic(2), l, {0, 1});
  cert.e = l;
  cert.l_in_e = FElem::generator(l);
  AutGroup aut_e = automorphism_group(l);
  cert.beta = GroupHom{aut_e.group, cert.problem.g,
                       find_commuting_beta(aut_e, cert.problem.alpha,
                                           restriction_of(aut_e, l, cert.l_in_e))};
  std::string text = certificate_to_json_text(cert);
  SolutionCertificate back = certificate_from_json_text(text);
  CHECK(certificate_to_json_text(back) == text);
  CHECK(verify_solution(back).pass);

  CHECK_THROWS_WITH_AS(certificate_from_json_text("{\"nope\": 1}"),
                       doctest::Contains("ParseError"), Error);
  CHECK_THROWS_WITH_AS(certificate_from_json_text("not json"),
                       doctest::Contains("ParseError"), Error);
}
