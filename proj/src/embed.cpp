#include "regal/embed.hpp"

#include <json.hpp>

#include <functional>

#include "regal/errors.hpp"
#include "regal/expr.hpp"
#include "regal/special.hpp"

namespace regal {

namespace {

AutGroup trivial_aut(const std::shared_ptr<const AbsField>& l) {
  AutGroup a;
  a.field = l;
  a.group = FiniteGroup::trivial();
  a.images = {FElem::generator(l)};
  return a;
}

AutGroup aut_of(const std::shared_ptr<const AbsField>& l) {
  if (l->is_rational()) return trivial_aut(l);
  return automorphism_group(l);
}

GroupHom make_hom_checked(const FiniteGroup& s, const FiniteGroup& t,
                          std::vector<int> map, const std::string& what) {
  GroupHom h{s, t, std::move(map)};
  if (!h.is_hom()) fail("InvalidHom", what + " is not a homomorphism");
  return h;
}

// Deterministic search for gamma: s -> g with alpha(gamma(a)) = res[a].
std::optional<std::vector<int>> search_compatible_hom(
    const FiniteGroup& s, const FiniteGroup& g, const GroupHom& alpha,
    const std::vector<int>& res) {
  std::vector<int> map(static_cast<std::size_t>(s.order), -1);
  map[0] = 0;
  std::function<bool(int)> go = [&](int a) -> bool {
    if (a == s.order) {
      GroupHom h{s, g, map};
      return h.is_hom();
    }
    if (map[static_cast<std::size_t>(a)] != -1) return go(a + 1);
    for (int c = 0; c < g.order; ++c) {
      if (alpha(c) != res[static_cast<std::size_t>(a)]) continue;
      map[static_cast<std::size_t>(a)] = c;
      bool ok = true;
      for (int b = 0; b < s.order && ok; ++b) {
        int ib = map[static_cast<std::size_t>(b)];
        if (ib == -1) continue;
        int iab = map[static_cast<std::size_t>(s.op(a, b))];
        if (iab != -1 && iab != g.op(c, ib)) ok = false;
        int iba = map[static_cast<std::size_t>(s.op(b, a))];
        if (ok && iba != -1 && iba != g.op(ib, c)) ok = false;
      }
      if (ok && go(a + 1)) return true;
      map[static_cast<std::size_t>(a)] = -1;
    }
    return false;
  };
  if (go(1)) return map;
  return std::nullopt;
}

void add(VerificationReport& r, const std::string& name, bool ok,
         const std::string& detail) {
  r.checks.push_back({name, ok, detail});
  if (!ok && r.failing.empty()) r.failing = name;
}

}  // namespace

EmbeddingProblem make_problem(const FiniteGroup& g,
                              std::shared_ptr<const AbsField> l,
                              const std::vector<int>& alpha_map) {
  g.validate();
  EmbeddingProblem ep;
  ep.g = g;
  ep.l = std::move(l);
  ep.aut = aut_of(ep.l);
  ep.alpha = make_hom_checked(g, ep.aut.group, alpha_map, "alpha");
  if (!ep.alpha.is_surjective())
    fail("NotEpimorphism", "alpha must map onto Aut(L/Q)");
  return ep;
}

EmbeddingProblem trivial_problem(const FiniteGroup& g) {
  return make_problem(g, AbsField::rationals(),
                      std::vector<int>(static_cast<std::size_t>(g.order), 0));
}

std::optional<GroupHom> is_split(const EmbeddingProblem& ep) {
  return find_section(ep.alpha);
}

VerificationReport verify_solution(const SolutionCertificate& cert) {
  VerificationReport r;
  if (!cert.e || !cert.problem.l)
    fail("PresentationIncomplete", "certificate is missing a field tower");

  // (a) L embeds into E via the supplied image
  bool a_ok = false;
  std::string a_detail;
  if (cert.l_in_e.field() && cert.l_in_e.field()->minpoly == cert.e->minpoly) {
    QPoly mp = cert.problem.l->is_rational() ? cert.problem.l->minpoly
                                             : minpoly_of(cert.l_in_e);
    a_ok = cert.problem.l->is_rational()
               ? cert.l_in_e.is_rational()
               : (mp == cert.problem.l->minpoly);
    if (!a_ok) a_detail = "supplied image is not a root of L's polynomial";
  } else {
    a_detail = "embedding image does not live in E";
  }
  add(r, "embedding", a_ok, a_detail);
  if (!a_ok) return r;

  // independent oracle: recompute Aut(E/Q) and Aut(L/Q) from scratch
  AutGroup aut_e = aut_of(cert.e);
  AutGroup aut_l = aut_of(cert.problem.l);
  bool pres_ok = aut_l.group.same_table(cert.problem.aut.group);

  // (b) the restriction to L is defined on all of Aut(E/Q)
  RestrictionMap rm = restriction_map(aut_e, Subfield{cert.problem.l, cert.l_in_e},
                                      aut_l);
  bool b_ok = pres_ok &&
              rm.domain.size() == static_cast<std::size_t>(aut_e.order());
  add(r, "restriction-domain", b_ok,
      pres_ok ? ("domain " + std::to_string(rm.domain.size()) + " of " +
                 std::to_string(aut_e.order()))
              : "problem's Aut(L/Q) presentation disagrees with the oracle");

  // (c) beta is an isomorphism from the recomputed Aut(E/Q) onto G
  bool c_ok = cert.beta.source.same_table(aut_e.group) &&
              cert.beta.target.same_table(cert.problem.g) &&
              cert.beta.is_hom() && cert.beta.is_injective() &&
              cert.beta.is_surjective();
  add(r, "beta-bijective", c_ok,
      c_ok ? "order " + std::to_string(aut_e.order())
           : "beta is not an isomorphism from the recomputed Aut(E/Q)");

  // (d) alpha o beta = restriction, element-wise
  bool d_ok = b_ok && c_ok;
  std::string d_detail;
  if (d_ok) {
    for (int s = 0; s < aut_e.order() && d_ok; ++s) {
      if (cert.problem.alpha(cert.beta(s)) != rm.map[static_cast<std::size_t>(s)]) {
        d_ok = false;
        d_detail = "fails at automorphism " + std::to_string(s);
      }
    }
  } else {
    d_detail = "skipped: prerequisite check failed";
  }
  add(r, "commutation", d_ok, d_detail);

  // (e) constant-field bookkeeping for solutions specialized from Q(T)
  bool e_ok = true;
  std::string e_detail;
  if (cert.regularity == "certified") {
    if (!cert.generic_poly) {
      e_ok = false;
      e_detail = "certified regularity without a generic polynomial";
    } else {
      std::vector<QPoly> extra;
      if (!cert.problem.l->is_rational()) {
        SplittingField lhat = splitting_field(cert.problem.l->minpoly);
        extra.push_back(lhat.field->minpoly);
      }
      RegularityVerdict rv = regularity_spot_check(*cert.generic_poly, extra);
      e_ok = rv.proxy_regular;
      e_detail = e_ok ? "proxy-regular over the standing battery"
                      : "proxy check failed";
    }
  } else if (cert.regularity == "assumed") {
    e_detail = "regularity assumed, not re-checked";
  } else {
    e_detail = "not a function-field solution";
  }
  add(r, "regularity", e_ok, e_detail);

  r.pass = true;
  for (const auto& c : r.checks) r.pass = r.pass && c.ok;
  return r;
}

BaseChangeResult base_change_to_function_field(const EmbeddingProblem& ep) {
  BaseChangeResult out;
  out.function_field = true;
  out.lm = ep.l;
  out.l_in_lm = FElem::generator(ep.l);
  out.aut_lm = ep.aut;
  out.alpha_m = ep.alpha;
  out.res_iso = GroupHom::identity(ep.aut.group);
  return out;
}

BaseChangeResult base_change(const EmbeddingProblem& ep,
                             const std::shared_ptr<const AbsField>& m) {
  BaseChangeResult out;
  out.m = m;
  if (m->is_rational()) {
    out.lm = ep.l;
    out.l_in_lm = FElem::generator(ep.l);
    out.m_in_lm = FElem::from_rat(ep.l, 0);
    out.aut_lm = ep.aut;
    out.alpha_m = ep.alpha;
    out.res_iso = GroupHom::identity(ep.aut.group);
    return out;
  }
  // M must be linearly disjoint from the Galois closure of L; for Galois
  // closures this is equivalent to M's polynomial staying irreducible there
  if (!ep.l->is_rational()) {
    SplittingField lhat = splitting_field(ep.l->minpoly);
    if (!is_irreducible_over_field(lhat.field,
                                   kp_from_qpoly(lhat.field, m->minpoly)))
      fail("NotLinearlyDisjoint",
           "M meets the Galois closure of L beyond Q");
  }
  if (ep.l->is_rational()) {
    out.lm = m;
    out.l_in_lm = FElem::from_rat(m, 0);
    out.m_in_lm = FElem::generator(m);
  } else {
    AdjoinResult ext = adjoin_root(ep.l, kp_from_qpoly(ep.l, m->minpoly), "c");
    out.lm = ext.field;
    out.l_in_lm = FElem(ext.field, ext.old_gen_image);
    out.m_in_lm = FElem(ext.field, ext.root_image);
  }
  out.aut_lm = automorphism_group(out.lm, {out.m_in_lm});
  AutGroup aut_l = aut_of(ep.l);
  RestrictionMap rm =
      restriction_map(out.aut_lm, Subfield{ep.l, out.l_in_lm}, aut_l);
  if (rm.domain.size() != static_cast<std::size_t>(out.aut_lm.order()))
    fail("InternalError", "restriction after disjoint base change not total");
  out.res_iso = make_hom_checked(out.aut_lm.group, ep.aut.group, rm.map,
                                 "restriction");
  if (!out.res_iso.is_injective() || !out.res_iso.is_surjective())
    fail("InternalError", "restriction after disjoint base change not bijective");
  // alpha_M = res^{-1} o alpha
  std::vector<int> inverse(static_cast<std::size_t>(ep.aut.order()));
  for (int s = 0; s < out.aut_lm.order(); ++s)
    inverse[static_cast<std::size_t>(out.res_iso(s))] = s;
  std::vector<int> am(static_cast<std::size_t>(ep.g.order));
  for (int x = 0; x < ep.g.order; ++x)
    am[static_cast<std::size_t>(x)] =
        inverse[static_cast<std::size_t>(ep.alpha(x))];
  out.alpha_m = make_hom_checked(ep.g, out.aut_lm.group, std::move(am),
                                 "alpha_M");
  return out;
}

ReductionPackage reduce_via_fiber_product(const EmbeddingProblem& ep,
                                          const std::shared_ptr<const AbsField>& lprime,
                                          const FElem& l_in_lprime,
                                          const std::vector<int>& gamma_prime_map) {
  ReductionPackage pkg;
  pkg.problem = ep;
  pkg.lprime = lprime;
  pkg.l_in_lprime = l_in_lprime;
  if (!l_in_lprime.field() || l_in_lprime.field()->minpoly != lprime->minpoly)
    fail("InclusionNotProvided", "no embedding of L into L' supplied");
  if (!ep.l->is_rational() && minpoly_of(l_in_lprime) != ep.l->minpoly)
    fail("InclusionNotProvided", "supplied image is not a root of L's polynomial");

  pkg.gal_lprime = aut_of(lprime);
  if (pkg.gal_lprime.order() != lprime->degree())
    fail("NotGalois", "L' must be Galois over Q");

  AutGroup aut_l = aut_of(ep.l);
  RestrictionMap rm =
      restriction_map(pkg.gal_lprime, Subfield{ep.l, l_in_lprime}, aut_l);
  if (rm.domain.size() != static_cast<std::size_t>(pkg.gal_lprime.order()))
    fail("InternalError", "restriction from a Galois L' must be total");
  GroupHom res = make_hom_checked(pkg.gal_lprime.group, ep.aut.group, rm.map,
                                  "restriction");
  if (!res.is_surjective())
    fail("InternalError", "restriction from L' must reach all of Aut(L/Q)");

  // gamma' with alpha o gamma' = res (eq. D3), supplied or searched
  std::vector<int> gmap = gamma_prime_map;
  if (gmap.empty()) {
    auto found =
        search_compatible_hom(pkg.gal_lprime.group, ep.g, ep.alpha, res.map);
    if (!found)
      fail("CompatibilityFailure",
           "no homomorphism gamma' with alpha o gamma' = restriction");
    gmap = *found;
  }
  pkg.gamma_prime =
      make_hom_checked(pkg.gal_lprime.group, ep.g, gmap, "gamma'");
  for (int s = 0; s < pkg.gal_lprime.order(); ++s)
    if (ep.alpha(pkg.gamma_prime(s)) != res(s))
      fail("CompatibilityFailure", "alpha o gamma' differs from restriction");

  pkg.fp = fiber_product(ep.alpha, res);
  pkg.alpha_prime = pkg.fp.proj2;
  if (!pkg.alpha_prime.is_surjective())
    fail("InternalError", "alpha' must be surjective given D3");
  pkg.delta = build_delta(pkg.fp, pkg.gamma_prime);
  pkg.beta_proj = pkg.fp.proj1;

  // order formula |G'| = |G| |Gal(L'/Q)| / |Aut(L/Q)| (res is surjective)
  long expected = static_cast<long>(ep.g.order) * pkg.gal_lprime.order() /
                  ep.aut.order();
  if (pkg.fp.group.order != expected)
    fail("InternalError", "fiber-product order mismatch");
  // kernel of the first projection matches ker(res)
  std::size_t kr = 0;
  for (int s = 0; s < pkg.gal_lprime.order(); ++s)
    if (res(s) == 0) ++kr;
  if (kernel_of_first_projection(pkg.fp).size() != kr)
    fail("InternalError", "fiber-product kernel mismatch");
  return pkg;
}

SolutionCertificate push_solution(const ReductionPackage& pkg,
                                  const SolutionCertificate& cert_prime) {
  // the upstream certificate must solve the reduced problem and verify
  if (!cert_prime.problem.g.same_table(pkg.fp.group) ||
      cert_prime.problem.l->minpoly != pkg.lprime->minpoly ||
      cert_prime.problem.alpha.map != pkg.alpha_prime.map)
    fail("UpstreamUnverified",
         "certificate does not address the reduced problem");
  VerificationReport vr = verify_solution(cert_prime);
  if (!vr.pass)
    fail("UpstreamUnverified", "upstream certificate fails check " + vr.failing);

  AutGroup aut_e = automorphism_group(cert_prime.e);
  if (aut_e.order() != cert_prime.e->degree())
    fail("UpstreamUnverified", "upstream solution field must be Galois");

  // beta_proj o beta': Aut(E/Q) -> G; its kernel cuts out E'
  GroupHom composed = pkg.beta_proj.compose(cert_prime.beta);
  std::vector<int> ker = composed.kernel_elements();
  Subfield eprime = fixed_field(aut_e, ker, "u");

  // carry L's generator: first into E, then down into E'
  QPoly l_rep_in_e = pkg.l_in_lprime.rep().compose(cert_prime.l_in_e.rep());
  FElem l_in_e_big(cert_prime.e, l_rep_in_e);
  std::optional<FElem> l_small = to_subfield(eprime, l_in_e_big);
  if (!l_small)
    fail("InternalError", "L does not land in the fixed field E'");

  // the induced isomorphism epsilon on Aut(E'/Q)
  AutGroup aut_ep = aut_of(eprime.field);
  RestrictionMap down = restriction_map(aut_e, eprime, aut_ep);
  if (down.domain.size() != static_cast<std::size_t>(aut_e.order()))
    fail("InternalError", "E' is not stabilized by Aut(E/Q)");
  std::vector<int> eps(static_cast<std::size_t>(aut_ep.order()), -1);
  for (int s = 0; s < aut_e.order(); ++s) {
    int tau = down.map[static_cast<std::size_t>(s)];
    int val = composed(s);
    if (eps[static_cast<std::size_t>(tau)] == -1)
      eps[static_cast<std::size_t>(tau)] = val;
    else if (eps[static_cast<std::size_t>(tau)] != val)
      fail("InternalError", "epsilon is not well-defined on Aut(E'/Q)");
  }
  for (int v : eps)
    if (v == -1) fail("InternalError", "epsilon not defined everywhere");

  SolutionCertificate out;
  out.problem = pkg.problem;
  out.e = eprime.field;
  out.l_in_e = *l_small;
  out.beta = make_hom_checked(aut_ep.group, pkg.problem.g, std::move(eps),
                              "epsilon");
  out.regularity = cert_prime.regularity == "certified"
                       ? "assumed"
                       : cert_prime.regularity;
  return out;
}

std::optional<std::vector<int>> find_commuting_isomorphism(
    const FiniteGroup& s, const GroupHom& alpha, const std::vector<int>& res) {
  if (s.order != alpha.source.order) return std::nullopt;
  std::vector<int> map(static_cast<std::size_t>(s.order), -1);
  std::vector<bool> used(static_cast<std::size_t>(alpha.source.order), false);
  map[0] = 0;
  used[0] = true;
  std::function<bool(int)> go = [&](int a) -> bool {
    if (a == s.order) {
      GroupHom h{s, alpha.source, map};
      return h.is_hom();
    }
    for (int c = 0; c < alpha.source.order; ++c) {
      if (used[static_cast<std::size_t>(c)]) continue;
      if (alpha(c) != res[static_cast<std::size_t>(a)]) continue;
      map[static_cast<std::size_t>(a)] = c;
      used[static_cast<std::size_t>(c)] = true;
      bool ok = true;
      for (int b = 0; b < s.order && ok; ++b) {
        int ib = map[static_cast<std::size_t>(b)];
        if (ib == -1) continue;
        int iab = map[static_cast<std::size_t>(s.op(a, b))];
        if (iab != -1 && iab != alpha.source.op(c, ib)) ok = false;
        int iba = map[static_cast<std::size_t>(s.op(b, a))];
        if (ok && iba != -1 && iba != alpha.source.op(ib, c)) ok = false;
      }
      if (ok && go(a + 1)) return true;
      map[static_cast<std::size_t>(a)] = -1;
      used[static_cast<std::size_t>(c)] = false;
    }
    return false;
  };
  if (res.size() != static_cast<std::size_t>(s.order)) return std::nullopt;
  if (go(1)) return map;
  return std::nullopt;
}

namespace {

nlohmann::json group_to_json(const FiniteGroup& g) {
  nlohmann::json j;
  if (!g.name.empty()) j["name"] = g.name;
  j["order"] = g.order;
  j["table"] = g.table;
  return j;
}

FiniteGroup group_from_json(const nlohmann::json& j) {
  FiniteGroup g;
  g.order = j.at("order").get<int>();
  g.table = j.at("table").get<std::vector<std::vector<int>>>();
  if (j.contains("name")) g.name = j["name"].get<std::string>();
  g.validate();
  return g;
}

std::shared_ptr<const AbsField> field_from_minpoly(const std::string& s,
                                                   const std::string& label) {
  QPoly mp = parse_qpoly(s, "Y");
  if (mp.degree() == 1 && mp.coeff(0) == 0) return AbsField::rationals();
  return AbsField::make(mp, label);
}

}  // namespace

std::string certificate_to_json_text(const SolutionCertificate& cert) {
  nlohmann::json j;
  j["problem"]["group"] = group_to_json(cert.problem.g);
  j["problem"]["l_minpoly"] = cert.problem.l->minpoly.str("Y");
  j["problem"]["alpha"] = cert.problem.alpha.map;
  j["e_minpoly"] = cert.e->minpoly.str("Y");
  j["l_in_e"] = cert.l_in_e.rep().str("Y");
  j["beta"]["source"] = group_to_json(cert.beta.source);
  j["beta"]["map"] = cert.beta.map;
  if (cert.generic_poly) j["generic_poly"] = cert.generic_poly->str("T", "X");
  j["regularity"] = cert.regularity;
  return j.dump(2);
}

SolutionCertificate certificate_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail("ParseError", std::string("bad certificate JSON: ") + e.what());
  }
  SolutionCertificate cert;
  try {
    FiniteGroup g = group_from_json(j.at("problem").at("group"));
    auto l = field_from_minpoly(j.at("problem").at("l_minpoly").get<std::string>(), "l");
    auto alpha = j.at("problem").at("alpha").get<std::vector<int>>();
    cert.problem = make_problem(g, l, alpha);
    cert.e = field_from_minpoly(j.at("e_minpoly").get<std::string>(), "e");
    cert.l_in_e = FElem(cert.e, parse_qpoly(j.at("l_in_e").get<std::string>(), "Y"));
    cert.beta.source = group_from_json(j.at("beta").at("source"));
    cert.beta.target = cert.problem.g;
    cert.beta.map = j.at("beta").at("map").get<std::vector<int>>();
    if (j.contains("generic_poly"))
      cert.generic_poly =
          parse_bipoly(j["generic_poly"].get<std::string>(), "T", "X");
    if (j.contains("regularity")) cert.regularity = j["regularity"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    fail("ParseError", std::string("bad certificate JSON: ") + e.what());
  }
  return cert;
}

}  // namespace regal
