#include "regal/pipeline.hpp"

#include <json.hpp>

#include "regal/errors.hpp"
#include "regal/expr.hpp"
#include "regal/linalg.hpp"
#include "regal/tower.hpp"

namespace regal {

namespace {

std::vector<int> zeros(int n) { return std::vector<int>(static_cast<std::size_t>(n), 0); }

QPoly square_minus(const Rat& d) {
  return QPoly(std::vector<Rat>{-d, Rat(0), Rat(1)});
}

bool irreducible_over(const std::shared_ptr<const AbsField>& k, const QPoly& f) {
  if (k->is_rational()) return is_irreducible_over_Q(f);
  return is_irreducible_over_field(k, kp_from_qpoly(k, f));
}

bool square_in(const std::shared_ptr<const AbsField>& k, const Rat& d) {
  if (k->is_rational()) return rat_is_square(d);
  return !roots_in_field(k, kp_from_qpoly(k, square_minus(d))).empty();
}

/// Images of E's generator under w -> w' (x fixed), one per base root, via
/// the expansion of the generator in the basis w^i x^j. nullopt when the two
/// layers do not generate E.
std::optional<std::vector<FElem>> two_gen_images(
    const std::shared_ptr<const AbsField>& e, const FElem& w, const FElem& x,
    int base_deg, const std::vector<FElem>& base_roots) {
  const int n = e->degree();
  const int cols = base_deg * 3;
  if (cols != n) return std::nullopt;
  std::vector<FElem> basis;
  for (int i = 0; i < base_deg; ++i)
    for (int j = 0; j < 3; ++j) {
      FElem b = FElem::from_rat(e, 1);
      for (int k = 0; k < i; ++k) b = b * w;
      for (int k = 0; k < j; ++k) b = b * x;
      basis.push_back(b);
    }
  RatMat m(static_cast<std::size_t>(n), RatVec(static_cast<std::size_t>(cols), Rat(0)));
  for (int c = 0; c < cols; ++c) {
    RatVec col = coords(basis[static_cast<std::size_t>(c)]);
    for (int r = 0; r < n; ++r)
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = col[static_cast<std::size_t>(r)];
  }
  auto sol = solve(m, coords(FElem::generator(e)));
  if (!sol) return std::nullopt;
  std::vector<FElem> images;
  for (const FElem& wp : base_roots) {
    FElem img = FElem::from_rat(e, 0);
    std::size_t idx = 0;
    for (int i = 0; i < base_deg; ++i)
      for (int j = 0; j < 3; ++j, ++idx) {
        if ((*sol)[idx] == 0) continue;
        FElem term = FElem::from_rat(e, (*sol)[idx]);
        for (int k = 0; k < i; ++k) term = term * wp;
        for (int k = 0; k < j; ++k) term = term * x;
        img = img + term;
      }
    images.push_back(img);
  }
  return images;
}

PipelineCertificate realize_catalog(const PipelineRequest& req,
                                    const EmbeddingProblem& ep) {
  auto cat = builtin_catalog();
  const RealizationEntry* entry = find_entry(cat, req.g);
  if (!entry)
    fail("CatalogMiss", "no realization entry for a group of order " +
                            std::to_string(req.g.order));
  KilledTower kt = kill_automorphisms(*entry, req.y);
  const int ng = req.g.order;
  const int d = entry->poly.degree_X();

  // base layer N: the entry specialized at z
  Rat z = req.forced_point ? req.forced_point->first : kt.z_witness;
  std::shared_ptr<const AbsField> base;
  if (ng == 1) {
    base = AbsField::rationals();
    z = kt.z_witness;
  } else {
    QPoly mz = entry->poly.eval_T(z);
    if (mz.degree() != d || !is_squarefree_over_Q(mz) ||
        !is_irreducible_over_Q(mz))
      fail("DegreeDrop", "entry polynomial degrades at z = " + rat_str(z));
    if (d == ng) {
      base = AbsField::make(mz, "w");
    } else {
      SplittingField sf = splitting_field(mz);
      if (sf.field->degree() != ng)
        fail("DegreeDrop", "splitting degree " +
                               std::to_string(sf.field->degree()) +
                               " at z = " + rat_str(z) + ", expected " +
                               std::to_string(ng));
      base = sf.field;
    }
  }

  // trinomial layer at t: irreducible over N with non-square discriminant
  // there (so exactly one root survives in the final field)
  auto t_valid = [&](const Rat& tc, QPoly& gt) {
    gt = kt.gadget.poly.eval_T(tc);
    if (gt.degree() != 3 || !is_squarefree_over_Q(gt)) return false;
    if (!irreducible_over(base, gt)) return false;
    return !square_in(base, gt.discriminant());
  };
  Rat t;
  QPoly gt;
  if (req.forced_point) {
    t = req.forced_point->second;
    if (!t_valid(t, gt))
      fail("DegreeDrop", "trinomial degrades over the base layer at t = " +
                             rat_str(t));
  } else {
    bool found = false;
    for (std::size_t i = 0; !found; ++i) {
      Int ti = canonical_int(i);
      if (abs(ti) > req.budget)
        fail("BudgetExhausted", "no acceptable trinomial point with |t| <= " +
                                    std::to_string(req.budget));
      t = Rat(ti);
      found = t_valid(t, gt);
    }
  }

  // the final field E = N(x) of degree 3|G|
  std::shared_ptr<const AbsField> e;
  FElem w, x;
  QPoly base_minpoly;
  if (ng == 1) {
    e = AbsField::make(gt, "theta");
    w = FElem::from_rat(e, 0);
    x = FElem::generator(e);
    base_minpoly = QPoly::variable();
  } else {
    AdjoinResult ext = adjoin_root(base, kp_from_qpoly(base, gt), "theta");
    e = ext.field;
    w = FElem(e, ext.old_gen_image);
    x = FElem(e, ext.root_image);
    base_minpoly = base->minpoly;
  }

  // independent automorphism oracle: count roots of both layers in E and
  // rebuild the group table from the surviving generator maps
  auto roots_w = roots_in_field(e, kp_from_qpoly(e, base_minpoly));
  auto roots_x = roots_in_field(e, kp_from_qpoly(e, gt));
  if (static_cast<int>(roots_w.size()) != ng)
    fail("TransferFailure", "base layer contributes " +
                                std::to_string(roots_w.size()) +
                                " roots, expected " + std::to_string(ng));
  if (roots_x.size() != 1)
    fail("TransferFailure", "trinomial has " + std::to_string(roots_x.size()) +
                                " roots in the final field, expected 1");
  auto images = two_gen_images(e, w, x, base_minpoly.degree(), roots_w);
  if (!images)
    fail("TransferFailure", "the two layers do not generate the final field");
  AutGroup aut = aut_group_from_images(e, *images);
  AutTranscript oracle;
  oracle.method = "two-generator";
  oracle.field_degree = e->degree();
  oracle.base_root_count = static_cast<int>(roots_w.size());
  oracle.gadget_root_count = static_cast<int>(roots_x.size());
  oracle.group = aut.group;
  if (9 * ng * ng <= kFactorDegreeCap && ng > 1) {
    AutGroup direct = automorphism_group(e);
    bool agree = direct.group.same_table(aut.group) &&
                 direct.images.size() == aut.images.size();
    for (std::size_t i = 0; agree && i < aut.images.size(); ++i)
      agree = direct.images[i] == aut.images[i];
    if (!agree)
      fail("TransferFailure", "two-generator and direct oracles disagree");
    oracle.method = "two-generator+direct";
  }

  // transfer the group action: restriction to N, then the catalog and
  // request isomorphisms
  std::vector<int> beta_map;
  if (ng == 1) {
    beta_map = {0};
  } else {
    AutGroup aut_base = automorphism_group(base);
    if (aut_base.order() != ng)
      fail("TransferFailure", "base layer is not Galois");
    RestrictionMap rm = restriction_map(aut, Subfield{base, w}, aut_base);
    if (rm.domain.size() != static_cast<std::size_t>(aut.order()))
      fail("TransferFailure", "base layer is not stabilized by Aut(E/Q)");
    auto phi1 = is_isomorphic(aut_base.group, entry->group);
    auto phi2 = is_isomorphic(entry->group, req.g);
    if (!phi1 || !phi2)
      fail("TransferFailure", "no isomorphism matching the catalog group");
    for (int s = 0; s < aut.order(); ++s)
      beta_map.push_back((*phi2)((*phi1)(rm.map[static_cast<std::size_t>(s)])));
  }
  GroupHom beta{aut.group, req.g, beta_map};
  if (!beta.is_hom() || !beta.is_injective() || !beta.is_surjective())
    fail("TransferFailure", "transferred action is not an isomorphism");

  PipelineCertificate out;
  out.route = "catalog-specialization";
  out.request = req;
  out.entry_name = entry->name;
  out.entry_poly = entry->poly;
  out.gadget_poly = kt.gadget.poly;
  out.z = z;
  out.t = t;
  out.base_minpoly = base_minpoly;
  out.gadget_minpoly = gt;
  out.base_root_rep = w.rep();
  out.gadget_root_rep = x.rep();
  out.oracle = oracle;
  out.solution.problem = ep;
  out.solution.e = e;
  out.solution.l_in_e = FElem::from_rat(e, 0);
  out.solution.beta = beta;
  out.solution.generic_poly = kt.gadget.poly;
  out.solution.regularity = "certified";
  out.notes.push_back("final field degree " + std::to_string(3 * ng) +
                      " with exactly " + std::to_string(ng) +
                      " automorphisms");
  out.notes.push_back(
      "not normal over Q: 1 of 3 roots of the specialized trinomial lies in "
      "the field");
  return out;
}

PipelineCertificate realize_galois(const PipelineRequest& req,
                                   const EmbeddingProblem& ep) {
  PipelineCertificate out;
  out.route = "galois";
  out.request = req;
  out.solution.problem = ep;
  out.solution.e = ep.l;
  out.solution.l_in_e = FElem::generator(ep.l);
  std::vector<int> inv(static_cast<std::size_t>(ep.g.order));
  for (int g = 0; g < ep.g.order; ++g)
    inv[static_cast<std::size_t>(ep.alpha(g))] = g;
  out.solution.beta = GroupHom{ep.aut.group, ep.g, std::move(inv)};
  out.solution.regularity = "n/a";
  if (ep.aut.order() == ep.l->degree())
    out.notes.push_back(
        "solution is Galois: E = L(T) is the constant extension; every "
        "specialization returns L");
  else
    out.notes.push_back("alpha is an isomorphism onto Aut(L/Q); E = L");
  return out;
}

PipelineCertificate realize_fiber(const PipelineRequest& req,
                                  const EmbeddingProblem& ep) {
  if (ep.l->degree() != 2 || ep.g.order != 6 ||
      !is_isomorphic(ep.g, FiniteGroup::symmetric(3)))
    fail("CatalogMiss",
         "fiber-product route currently covers S3-type problems over a "
         "quadratic field only");
  ReductionPackage pkg =
      reduce_via_fiber_product(ep, ep.l, FElem::generator(ep.l));

  // discriminant-matched cubic family: X^3 - cX - 2c with c = D T^2 + 27 has
  // discriminant D (2Tc)^2, so its splitting field contains sqrt(D)
  Rat disc_l = ep.l->minpoly.discriminant();
  QPoly c(std::vector<Rat>{Rat(27), Rat(0), disc_l});
  BiPoly family{std::vector<QPoly>{QPoly::zero() - (c + c), QPoly::zero() - c,
                                   QPoly::zero(), QPoly::constant(1)}};

  Rat t;
  QPoly ft;
  bool found = false;
  for (std::size_t i = 0; !found; ++i) {
    Int ti = canonical_int(i);
    if (abs(ti) > req.budget)
      fail("BudgetExhausted", "no acceptable family point with |t| <= " +
                                  std::to_string(req.budget));
    t = Rat(ti);
    ft = family.eval_T(t);
    found = ft.degree() == 3 && is_squarefree_over_Q(ft) &&
            is_irreducible_over_Q(ft);
  }
  SplittingField sf = splitting_field(ft);
  if (sf.field->degree() != 6)
    fail("DegreeDrop", "family cubic does not have group S3 at t = " + rat_str(t));
  auto e = sf.field;
  auto l_roots = roots_in_field(e, kp_from_qpoly(e, ep.l->minpoly));
  if (l_roots.empty())
    fail("TransferFailure", "quadratic layer missing from the splitting field");

  SolutionCertificate cp;
  cp.problem = make_problem(pkg.fp.group, ep.l, pkg.alpha_prime.map);
  cp.e = e;
  cp.l_in_e = l_roots.front();
  AutGroup aut_e = automorphism_group(e);
  AutGroup aut_l = automorphism_group(ep.l);
  RestrictionMap rm = restriction_map(aut_e, Subfield{ep.l, cp.l_in_e}, aut_l);
  if (rm.domain.size() != static_cast<std::size_t>(aut_e.order()))
    fail("TransferFailure", "restriction to the quadratic layer not total");
  auto bmap = find_commuting_isomorphism(aut_e.group, pkg.alpha_prime, rm.map);
  if (!bmap) fail("TransferFailure", "no commuting isomorphism for the family");
  cp.beta = GroupHom{aut_e.group, pkg.fp.group, *bmap};
  cp.generic_poly = family;
  cp.regularity = "certified";

  PipelineCertificate out;
  out.route = "fiber-product";
  out.request = req;
  out.t = t;
  out.solution = push_solution(pkg, cp);
  out.notes.push_back("reduced through the fiber product of order " +
                      std::to_string(pkg.fp.group.order) +
                      " over L' = L; solved by the family " +
                      family.str("T", "X") + " at t = " + rat_str(t));
  return out;
}

}  // namespace

PipelineCertificate realize_aut(const PipelineRequest& req) {
  req.g.validate();
  std::shared_ptr<const AbsField> l =
      req.l_minpoly ? AbsField::make(*req.l_minpoly, "r")
                    : AbsField::rationals();
  std::vector<int> amap = req.alpha_map;
  if (amap.empty() && l->is_rational()) amap = zeros(req.g.order);
  EmbeddingProblem ep = make_problem(req.g, l, amap);
  if (l->is_rational()) return realize_catalog(req, ep);
  if (ep.alpha.is_injective()) return realize_galois(req, ep);
  return realize_fiber(req, ep);
}

namespace {

void add_check(VerificationReport& r, const std::string& name, bool ok,
               const std::string& detail) {
  r.checks.push_back({name, ok, detail});
  if (!ok && r.failing.empty()) r.failing = name;
}

void finish(VerificationReport& r) {
  r.pass = true;
  for (const auto& c : r.checks) r.pass = r.pass && c.ok;
}

}  // namespace

VerificationReport verify_certificate(const PipelineCertificate& cert) {
  if (cert.route != "catalog-specialization") return verify_solution(cert.solution);

  VerificationReport r;
  bool have = cert.entry_poly && cert.gadget_poly && cert.z && cert.t &&
              cert.base_minpoly && cert.gadget_minpoly && cert.base_root_rep &&
              cert.gadget_root_rep && cert.oracle && cert.solution.e &&
              cert.solution.problem.l && cert.solution.problem.l->is_rational();
  add_check(r, "route-data", have,
            have ? "" : "certificate is missing tower payload");
  if (!have) {
    finish(r);
    return r;
  }
  const int ng = cert.solution.problem.g.order;
  const auto& e = cert.solution.e;

  // the trinomial family really is the family at the requested y, and the
  // frozen univariate layer is its value at t
  TrinomialGadget gad = make_gadget(cert.request.y);
  bool gcons = (*cert.gadget_poly == gad.poly) &&
               (*cert.gadget_minpoly == cert.gadget_poly->eval_T(*cert.t));
  add_check(r, "gadget-consistency", gcons,
            gcons ? "" : "embedded trinomial data is inconsistent");

  // the specialization point must itself be acceptable
  {
    bool ok = true;
    std::string why;
    const QPoly& gt = *cert.gadget_minpoly;
    if (gt.degree() != 3 || !is_squarefree_over_Q(gt) ||
        !is_irreducible_over_Q(gt)) {
      ok = false;
      why = "trinomial degrades at t = " + rat_str(*cert.t);
    } else if (ng > 1) {
      QPoly mz = cert.entry_poly->eval_T(*cert.z);
      if (mz.degree() != cert.entry_poly->degree_X() ||
          !is_squarefree_over_Q(mz) || !is_irreducible_over_Q(mz)) {
        ok = false;
        why = "entry polynomial degrades at z = " + rat_str(*cert.z);
      }
    }
    add_check(r, "specialization-acceptance", ok, why);
  }

  const int base_deg = cert.base_minpoly->degree();
  bool degs = base_deg == (ng == 1 ? 1 : ng) && e->degree() == 3 * ng;
  add_check(r, "tower-degrees", degs,
            "[E:Q] = " + std::to_string(e->degree()) + ", base degree " +
                std::to_string(base_deg));
  if (!degs) {
    finish(r);
    return r;
  }

  FElem w(e, *cert.base_root_rep);
  FElem x(e, *cert.gadget_root_rep);
  bool wok = minpoly_of(w) == *cert.base_minpoly;
  add_check(r, "base-root", wok,
            wok ? "" : "embedded base root has the wrong minimal polynomial");
  bool xok = minpoly_of(x) == *cert.gadget_minpoly;
  add_check(r, "gadget-root", xok,
            xok ? "" : "embedded trinomial root has the wrong minimal polynomial");
  if (!wok || !xok) {
    finish(r);
    return r;
  }

  auto roots_w = roots_in_field(e, kp_from_qpoly(e, *cert.base_minpoly));
  auto roots_x = roots_in_field(e, kp_from_qpoly(e, *cert.gadget_minpoly));
  bool counts = static_cast<int>(roots_w.size()) == ng && roots_x.size() == 1;
  add_check(r, "root-counts", counts,
            std::to_string(roots_w.size()) + " base roots, " +
                std::to_string(roots_x.size()) +
                " of 3 trinomial roots: E is not normal over Q");

  auto images = two_gen_images(e, w, x, base_deg, roots_w);
  add_check(r, "generator-span", images.has_value(),
            images ? "E = Q(w, x)" : "the two layers do not generate E");

  bool base_ok = false;
  std::string base_detail;
  if (ng == 1) {
    base_ok = true;
    base_detail = "base layer is Q";
  } else {
    try {
      auto nf = AbsField::make(*cert.base_minpoly, "w");
      AutGroup aut_base = automorphism_group(nf);
      base_ok = aut_base.order() == ng &&
                is_isomorphic(aut_base.group, cert.solution.problem.g).has_value();
      base_detail = base_ok ? "Galois with the requested group"
                            : "base layer group mismatch";
    } catch (const Error& err) {
      base_detail = err.what();
    }
  }
  add_check(r, "base-galois", base_ok, base_detail);

  bool oracle_ok = false;
  std::string oracle_detail;
  if (counts && images) {
    try {
      AutGroup aut = aut_group_from_images(e, *images);
      oracle_ok = aut.group.same_table(cert.solution.beta.source) &&
                  aut.group.same_table(cert.oracle->group) &&
                  cert.oracle->base_root_count == ng &&
                  cert.oracle->gadget_root_count == 1;
      oracle_detail = oracle_ok ? "reconstructed table of order " +
                                      std::to_string(aut.order())
                                : "reconstructed table disagrees";
    } catch (const Error& err) {
      oracle_detail = err.what();
    }
  } else {
    oracle_detail = "skipped: prerequisite check failed";
  }
  add_check(r, "aut-oracle", oracle_ok, oracle_detail);

  const GroupHom& beta = cert.solution.beta;
  bool beta_ok = beta.target.same_table(cert.solution.problem.g) &&
                 beta.is_hom() && beta.is_injective() && beta.is_surjective();
  add_check(r, "beta-iso", beta_ok,
            beta_ok ? "commutation with the trivial restriction is automatic"
                    : "beta is not an isomorphism onto G");

  RegularityVerdict rv = regularity_spot_check(*cert.gadget_poly);
  add_check(r, "regularity", rv.proxy_regular,
            rv.proxy_regular ? "proxy-regular over the standing battery"
                             : "proxy check failed");
  finish(r);
  return r;
}

namespace {

nlohmann::json group_json(const FiniteGroup& g) {
  nlohmann::json j;
  if (!g.name.empty()) j["name"] = g.name;
  j["order"] = g.order;
  j["table"] = g.table;
  return j;
}

FiniteGroup group_unjson(const nlohmann::json& j) {
  FiniteGroup g;
  g.order = j.at("order").get<int>();
  g.table = j.at("table").get<std::vector<std::vector<int>>>();
  if (j.contains("name")) g.name = j["name"].get<std::string>();
  g.validate();
  return g;
}

}  // namespace

std::string pipeline_to_json_text(const PipelineCertificate& cert, bool pretty) {
  nlohmann::json j;
  j["route"] = cert.route;
  nlohmann::json req;
  req["group"] = group_json(cert.request.g);
  if (cert.request.l_minpoly) req["l_minpoly"] = cert.request.l_minpoly->str("Y");
  if (!cert.request.alpha_map.empty()) req["alpha"] = cert.request.alpha_map;
  req["y"] = rat_str(cert.request.y);
  req["budget"] = cert.request.budget;
  if (cert.request.forced_point)
    req["point"] = {rat_str(cert.request.forced_point->first),
                    rat_str(cert.request.forced_point->second)};
  j["request"] = std::move(req);
  j["solution"] = nlohmann::json::parse(certificate_to_json_text(cert.solution));
  if (!cert.notes.empty()) j["notes"] = cert.notes;
  if (cert.entry_name) j["entry"] = *cert.entry_name;
  if (cert.entry_poly) j["entry_poly"] = cert.entry_poly->str("Z", "X");
  if (cert.gadget_poly) j["gadget_poly"] = cert.gadget_poly->str("T", "X");
  if (cert.z) j["z"] = rat_str(*cert.z);
  if (cert.t) j["t"] = rat_str(*cert.t);
  if (cert.base_minpoly) j["base_minpoly"] = cert.base_minpoly->str("Y");
  if (cert.gadget_minpoly) j["gadget_minpoly"] = cert.gadget_minpoly->str("Y");
  if (cert.base_root_rep) j["base_root"] = cert.base_root_rep->str("Y");
  if (cert.gadget_root_rep) j["gadget_root"] = cert.gadget_root_rep->str("Y");
  if (cert.oracle) {
    nlohmann::json o;
    o["method"] = cert.oracle->method;
    o["field_degree"] = cert.oracle->field_degree;
    o["base_root_count"] = cert.oracle->base_root_count;
    o["gadget_root_count"] = cert.oracle->gadget_root_count;
    o["group"] = group_json(cert.oracle->group);
    j["oracle"] = std::move(o);
  }
  return pretty ? j.dump(2) : j.dump();
}

PipelineCertificate pipeline_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail("ParseError", std::string("bad certificate JSON: ") + e.what());
  }
  PipelineCertificate cert;
  try {
    cert.route = j.at("route").get<std::string>();
    const auto& req = j.at("request");
    cert.request.g = group_unjson(req.at("group"));
    if (req.contains("l_minpoly"))
      cert.request.l_minpoly =
          parse_qpoly(req["l_minpoly"].get<std::string>(), "Y");
    if (req.contains("alpha"))
      cert.request.alpha_map = req["alpha"].get<std::vector<int>>();
    cert.request.y = parse_rat(req.at("y").get<std::string>());
    cert.request.budget = req.at("budget").get<int>();
    if (req.contains("point"))
      cert.request.forced_point = {
          parse_rat(req["point"][0].get<std::string>()),
          parse_rat(req["point"][1].get<std::string>())};
    cert.solution = certificate_from_json_text(j.at("solution").dump());
    if (j.contains("notes"))
      cert.notes = j["notes"].get<std::vector<std::string>>();
    if (j.contains("entry")) cert.entry_name = j["entry"].get<std::string>();
    if (j.contains("entry_poly"))
      cert.entry_poly = parse_bipoly(j["entry_poly"].get<std::string>(), "Z", "X");
    if (j.contains("gadget_poly"))
      cert.gadget_poly = parse_bipoly(j["gadget_poly"].get<std::string>(), "T", "X");
    if (j.contains("z")) cert.z = parse_rat(j["z"].get<std::string>());
    if (j.contains("t")) cert.t = parse_rat(j["t"].get<std::string>());
    if (j.contains("base_minpoly"))
      cert.base_minpoly = parse_qpoly(j["base_minpoly"].get<std::string>(), "Y");
    if (j.contains("gadget_minpoly"))
      cert.gadget_minpoly =
          parse_qpoly(j["gadget_minpoly"].get<std::string>(), "Y");
    if (j.contains("base_root"))
      cert.base_root_rep = parse_qpoly(j["base_root"].get<std::string>(), "Y");
    if (j.contains("gadget_root"))
      cert.gadget_root_rep = parse_qpoly(j["gadget_root"].get<std::string>(), "Y");
    if (j.contains("oracle")) {
      AutTranscript o;
      const auto& oj = j["oracle"];
      o.method = oj.at("method").get<std::string>();
      o.field_degree = oj.at("field_degree").get<int>();
      o.base_root_count = oj.at("base_root_count").get<int>();
      o.gadget_root_count = oj.at("gadget_root_count").get<int>();
      o.group = group_unjson(oj.at("group"));
      cert.oracle = std::move(o);
    }
  } catch (const nlohmann::json::exception& e) {
    fail("ParseError", std::string("bad certificate JSON: ") + e.what());
  }
  return cert;
}

}  // namespace regal
