#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "regal/errors.hpp"
#include "regal/pipeline.hpp"
#include "regal/tower.hpp"

using namespace regal;

TEST_CASE("full run for the trivial group") {
  PipelineRequest req;
  req.g = FiniteGroup::trivial();
  PipelineCertificate cert = realize_aut(req);
  CHECK(cert.route == "catalog-specialization");
  CHECK(cert.entry_name == "C1");
  CHECK(cert.solution.e->minpoly == QPoly::from_int_coeffs({1, 1, 0, 1}));
  CHECK(*cert.t == rat(1));
  REQUIRE(cert.oracle);
  CHECK(cert.oracle->field_degree == 3);
  CHECK(cert.oracle->gadget_root_count == 1);  // 1 root of 3: not normal
  VerificationReport rep = verify_certificate(cert);
  CHECK(rep.pass);
}

TEST_CASE("full run for the group of order two") {
  PipelineRequest req;
  req.g = FiniteGroup::cyclic(2);
  PipelineCertificate cert = realize_aut(req);
  CHECK(cert.route == "catalog-specialization");
  CHECK(cert.entry_name == "C2");
  CHECK(*cert.z == rat(-1));
  CHECK(*cert.t == rat(1));
  CHECK(cert.solution.e->degree() == 6);
  REQUIRE(cert.oracle);
  CHECK(cert.oracle->method == "two-generator+direct");
  CHECK(cert.oracle->base_root_count == 2);
  CHECK(cert.oracle->gadget_root_count == 1);
  CHECK(is_isomorphic(cert.oracle->group, FiniteGroup::cyclic(2)));
  CHECK(verify_certificate(cert).pass);

  // forced point: the worked example lands in a different sextic field
  PipelineRequest forced = req;
  forced.forced_point = {{rat(2), rat(1)}};
  PipelineCertificate fc = realize_aut(forced);
  CHECK(fc.solution.e->degree() == 6);
  CHECK(fc.solution.e->minpoly != cert.solution.e->minpoly);
  // sqrt(2) lives in the forced field
  CHECK(roots_in_field(fc.solution.e,
                       kp_from_qpoly(fc.solution.e,
                                     QPoly::from_int_coeffs({-2, 0, 1})))
            .size() == 2);
  CHECK(verify_certificate(fc).pass);
}

TEST_CASE("determinism and JSON round trip") {
  PipelineRequest req;
  req.g = FiniteGroup::cyclic(2);
  std::string a = pipeline_to_json_text(realize_aut(req));
  std::string b = pipeline_to_json_text(realize_aut(req));
  CHECK(a == b);
  PipelineCertificate back = pipeline_from_json_text(a);
  CHECK(pipeline_to_json_text(back) == a);
  CHECK(verify_certificate(back).pass);
  CHECK_THROWS_WITH_AS(pipeline_from_json_text("{}"),
                       doctest::Contains("ParseError"), Error);
}

TEST_CASE("tampered certificates fail the named check") {
  PipelineRequest req;
  req.g = FiniteGroup::cyclic(2);
  PipelineCertificate cert = realize_aut(req);

  PipelineCertificate bad_beta = cert;
  bad_beta.solution.beta.map = {1, 1};
  VerificationReport r1 = verify_certificate(bad_beta);
  CHECK_FALSE(r1.pass);
  CHECK(r1.failing == "beta-iso");

  // swap the solution field for its Galois closure: degrees betray it
  PipelineCertificate bad_e = cert;
  SplittingField closure = splitting_field(cert.solution.e->minpoly);
  bad_e.solution.e = closure.field;
  bad_e.solution.l_in_e = FElem::from_rat(closure.field, 0);
  VerificationReport r2 = verify_certificate(bad_e);
  CHECK_FALSE(r2.pass);
  CHECK(r2.failing == "tower-degrees");

  // rejected specialization point
  PipelineCertificate bad_t = cert;
  bad_t.t = rat(0);
  bad_t.gadget_minpoly = cert.gadget_poly->eval_T(rat(0));
  VerificationReport r3 = verify_certificate(bad_t);
  CHECK_FALSE(r3.pass);
  CHECK(r3.failing == "specialization-acceptance");
}

TEST_CASE("no catalog entry: a clean miss") {
  PipelineRequest req;
  req.g = FiniteGroup::dihedral(4);
  CHECK_THROWS_WITH_AS(realize_aut(req), doctest::Contains("CatalogMiss"),
                       Error);
}

TEST_CASE("degenerate route: alpha an isomorphism onto a Galois group") {
  PipelineRequest req;
  req.g = FiniteGroup::cyclic(2);
  req.l_minpoly = QPoly::from_int_coeffs({-5, 0, 1});
  req.alpha_map = {0, 1};
  PipelineCertificate cert = realize_aut(req);
  CHECK(cert.route == "galois");
  CHECK(cert.solution.e->minpoly == *req.l_minpoly);
  CHECK(verify_certificate(cert).pass);
  REQUIRE(!cert.notes.empty());
  CHECK(cert.notes.front().find("Galois") != std::string::npos);
}

TEST_CASE("fiber-product route: S3 acting through a quadratic field") {
  PipelineRequest req;
  req.g = FiniteGroup::symmetric(3);
  req.l_minpoly = QPoly::from_int_coeffs({-2, 0, 1});
  req.alpha_map.assign(6, 0);
  for (int i = 0; i < 6; ++i)
    req.alpha_map[static_cast<std::size_t>(i)] =
        req.g.element_order(i) == 2 ? 1 : 0;
  PipelineCertificate cert = realize_aut(req);
  CHECK(cert.route == "fiber-product");
  CHECK(cert.solution.e->degree() == 6);
  // sqrt(2) is present, as the discriminant matching demands
  CHECK(!roots_in_field(cert.solution.e,
                        kp_from_qpoly(cert.solution.e, *req.l_minpoly))
             .empty());
  VerificationReport rep = verify_certificate(cert);
  CHECK(rep.pass);
  // byte-stable
  CHECK(pipeline_to_json_text(realize_aut(req)) == pipeline_to_json_text(cert));
}

TEST_CASE("unsupported reductions miss cleanly") {
  PipelineRequest req;
  req.g = FiniteGroup::symmetric(4);
  req.l_minpoly = QPoly::from_int_coeffs({-2, 0, 1});
  req.alpha_map.assign(24, 0);
  // any surjection S4 -> C2 factors through the sign
  auto s4 = FiniteGroup::symmetric(4);
  // build the sign map from element orders: odd permutations have even order
  // traces; use the unique index-2 subgroup via closure of squares instead
  std::vector<int> a4;
  for (int i = 0; i < 24; ++i) a4.push_back(i);
  // squares generate A4
  std::vector<int> sq;
  for (int i = 0; i < 24; ++i) sq.push_back(s4.op(i, i));
  std::vector<int> alt = s4.closure(sq);
  for (int i = 0; i < 24; ++i)
    req.alpha_map[static_cast<std::size_t>(i)] =
        std::binary_search(alt.begin(), alt.end(), i) ? 0 : 1;
  CHECK_THROWS_WITH_AS(realize_aut(req), doctest::Contains("CatalogMiss"),
                       Error);
}
