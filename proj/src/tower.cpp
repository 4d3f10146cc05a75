#include "regal/tower.hpp"

#include <algorithm>
#include <map>

#include "regal/errors.hpp"

namespace regal {

FElem apply_aut(const AutGroup& g, int elem, const FElem& x) {
  const FElem& gi = g.images[static_cast<std::size_t>(elem)];
  FElem acc = FElem::from_rat(g.field, 0);
  const QPoly& r = x.rep();
  for (int i = r.degree(); i >= 0; --i)
    acc = acc * gi + FElem::from_rat(g.field, r.coeff(i));
  return acc;
}

AutGroup aut_group_from_images(const std::shared_ptr<const AbsField>& l,
                               std::vector<FElem> images) {
  FElem id = FElem::generator(l);
  std::sort(images.begin(), images.end(), [&](const FElem& a, const FElem& b) {
    if (a == id) return b != id;   // identity first
    if (b == id) return false;
    return QPoly::order_less(a.rep(), b.rep());
  });
  if (images.empty() || images[0] != id)
    fail("InternalError", "automorphism list lacks the identity");
  AutGroup g;
  g.field = l;
  g.images = std::move(images);
  int n = static_cast<int>(g.images.size());
  g.group.name = "Aut";
  g.group.order = n;
  g.group.table.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  auto find = [&](const FElem& x) {
    for (int i = 0; i < n; ++i)
      if (g.images[static_cast<std::size_t>(i)] == x) return i;
    fail("InternalError", "automorphisms not closed under composition");
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // (a∘b)(gamma) = a(b(gamma))
      FElem comp = apply_aut(g, a, g.images[static_cast<std::size_t>(b)]);
      g.group.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = find(comp);
    }
  g.group.validate();
  return g;
}

AutGroup automorphism_group(const std::shared_ptr<const AbsField>& l,
                            const std::vector<FElem>& fixed) {
  std::vector<FElem> roots = roots_in_field(l, kp_from_qpoly(l, l->minpoly));
  std::vector<FElem> images;
  for (const FElem& r : roots) {
    AutGroup probe{l, {}, {r}};
    bool ok = true;
    for (const FElem& f : fixed)
      if (apply_aut(probe, 0, f) != f) { ok = false; break; }
    if (ok) images.push_back(r);
  }
  return aut_group_from_images(l, images);
}

// ---------------------------------------------------------------------------
// Splitting fields.
// ---------------------------------------------------------------------------

SplittingField splitting_field(const QPoly& f, int degree_cap) {
  if (f.degree() < 1) fail("DegreeTooLow", "splitting field needs degree >= 1");
  if (!is_squarefree_over_Q(f)) fail("NotSeparable", "polynomial has repeated roots");
  SplittingField sf;
  sf.poly = f.monic();

  std::shared_ptr<const AbsField> cur = AbsField::rationals();
  std::vector<FElem> roots;           // collected roots, in cur
  std::vector<KPoly> pending;         // nonlinear irreducible factors over cur
  sf.chain_gammas.push_back(FElem::from_rat(cur, 0));  // gamma_0 = 0 over Q

  {
    auto fl = factor_over_Q(sf.poly);
    for (auto& [g, m] : fl.factors) {
      KPoly kg = kp_from_qpoly(cur, g);
      if (g.degree() == 1)
        roots.push_back(-kg[0] / kg[1]);
      else
        pending.push_back(std::move(kg));
    }
  }

  int step_index = 0;
  while (!pending.empty()) {
    // deterministic choice: smallest pending factor
    std::sort(pending.begin(), pending.end(), kp_order_less);
    KPoly g = pending.front();
    pending.erase(pending.begin());

    std::string label = "g" + std::to_string(++step_index);
    auto ext = adjoin_root(cur, g, label, degree_cap);

    SplittingStep step;
    for (const auto& c : g) step.factor_reps.push_back(c.rep());
    step.mix = ext.mix;
    sf.steps.push_back(std::move(step));

    // re-embed previously collected data
    for (auto& r : roots) r = embed_elem(r, ext);
    for (auto& gamma : sf.chain_gammas) gamma = embed_elem(gamma, ext);
    for (auto& r : sf.chain_roots) r = embed_elem(r, ext);
    std::vector<KPoly> lifted;
    for (auto& p : pending) {
      KPoly q;
      for (auto& c : p) q.push_back(embed_elem(c, ext));
      lifted.push_back(std::move(q));
    }
    pending = std::move(lifted);
    cur = ext.field;

    FElem x(cur, ext.root_image);
    sf.chain_roots.push_back(x);
    sf.chain_gammas.push_back(FElem::generator(cur));
    roots.push_back(x);

    // divide out the new root and re-factor what remains of g
    KPoly gl;
    for (const auto& rep : sf.steps.back().factor_reps)
      gl.push_back(FElem(cur, QPoly::divmod(rep.compose(sf.chain_gammas[sf.chain_gammas.size() - 2].rep()), cur->minpoly).second));
    KPoly lin{-x, FElem::from_rat(cur, 1)};
    auto [quot, rem] = kp_divmod(gl, lin);
    if (!rem.empty()) fail("InternalError", "adjoined root does not divide its factor");
    if (kp_deg(quot) >= 1) {
      auto fl = factor_over_number_field(cur, quot);
      for (auto& [irr, m] : fl.factors) {
        if (kp_deg(irr) == 1)
          roots.push_back(-irr[0] / irr[1]);
        else
          pending.push_back(irr);
      }
    }
    // other pending factors may now split too
    std::vector<KPoly> next;
    for (auto& p : pending) {
      auto fl = factor_over_number_field(cur, p);
      for (auto& [irr, m] : fl.factors) {
        if (kp_deg(irr) == 1)
          roots.push_back(-irr[0] / irr[1]);
        else
          next.push_back(irr);
      }
    }
    pending = std::move(next);
  }

  sf.field = cur;
  std::sort(roots.begin(), roots.end(), [](const FElem& a, const FElem& b) {
    return QPoly::order_less(a.rep(), b.rep());
  });
  sf.roots = std::move(roots);
  if (static_cast<int>(sf.roots.size()) != sf.poly.degree())
    fail("InternalError", "splitting field does not contain all roots");
  return sf;
}

namespace {

/// Evaluate a chain factor whose coefficients are reps over sigma(gamma_prev).
FElem eval_mapped_factor(const std::vector<QPoly>& reps, const FElem& sigma_gamma_prev,
                         const FElem& candidate) {
  const auto& l = candidate.field();
  FElem acc = FElem::from_rat(l, 0);
  for (auto it = reps.rbegin(); it != reps.rend(); ++it) {
    // coefficient value under sigma
    FElem c = FElem::from_rat(l, 0);
    for (int i = it->degree(); i >= 0; --i)
      c = c * sigma_gamma_prev + FElem::from_rat(l, it->coeff(i));
    acc = acc * candidate + c;
  }
  return acc;
}

void galois_backtrack(const SplittingField& sf, std::size_t level, FElem sigma_gamma,
                      std::vector<FElem>& out) {
  if (level == sf.steps.size()) {
    out.push_back(sigma_gamma);
    return;
  }
  const SplittingStep& step = sf.steps[level];
  for (const FElem& cand : sf.roots) {
    if (!eval_mapped_factor(step.factor_reps, sigma_gamma, cand).is_zero()) continue;
    // gamma_{level+1} = x_{level+1} + mix * gamma_level
    galois_backtrack(sf, level + 1, cand + sigma_gamma * step.mix, out);
  }
}

}  // namespace

AutGroup galois_group(const SplittingField& sf) {
  std::vector<FElem> images;
  FElem start = FElem::from_rat(sf.field, 0);  // sigma(gamma_0) = 0
  galois_backtrack(sf, 0, start, images);
  if (static_cast<int>(images.size()) != sf.field->degree())
    fail("InternalError", "automorphism count differs from the field degree");
  for (const FElem& img : images) {
    // each image is a root of the defining polynomial
    FElem chk = kp_eval(kp_from_qpoly(sf.field, sf.field->minpoly), img);
    if (!chk.is_zero()) fail("InternalError", "invalid automorphism image");
  }
  return aut_group_from_images(sf.field, std::move(images));
}

// ---------------------------------------------------------------------------
// Subfields, restriction maps, fixed fields.
// ---------------------------------------------------------------------------

RatVec coords(const FElem& x) {
  int n = x.field()->degree();
  RatVec v(static_cast<std::size_t>(n), Rat(0));
  for (int i = 0; i <= x.rep().degree(); ++i) v[static_cast<std::size_t>(i)] = x.rep().coeff(i);
  return v;
}

std::optional<FElem> to_subfield(const Subfield& sub, const FElem& x) {
  int d = sub.field->degree();
  int n = x.field()->degree();
  // columns: coords of gen^j, j = 0..d-1
  RatMat a(static_cast<std::size_t>(n), RatVec(static_cast<std::size_t>(d), Rat(0)));
  FElem pw = FElem::from_rat(x.field(), 1);
  for (int j = 0; j < d; ++j) {
    RatVec col = coords(pw);
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col[static_cast<std::size_t>(i)];
    pw = pw * sub.gen_in_big;
  }
  auto sol = solve(a, coords(x));
  if (!sol) return std::nullopt;
  return FElem(sub.field, QPoly(std::move(*sol)));
}

QPoly minpoly_of(const FElem& x) {
  int n = x.field()->degree();
  std::vector<RatVec> pows;
  FElem pw = FElem::from_rat(x.field(), 1);
  for (int d = 1; d <= n; ++d) {
    pows.push_back(coords(pw));
    pw = pw * x;
    // try to express x^d in span of lower powers
    RatMat a(static_cast<std::size_t>(n), RatVec(pows.size(), Rat(0)));
    for (std::size_t j = 0; j < pows.size(); ++j)
      for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)][j] = pows[j][static_cast<std::size_t>(i)];
    auto sol = solve(a, coords(pw));
    if (sol) {
      std::vector<Rat> c;
      for (const Rat& v : *sol) c.push_back(-v);
      c.push_back(1);
      return QPoly(std::move(c));
    }
  }
  fail("InternalError", "minimal polynomial search failed");
}

RestrictionMap restriction_map(const AutGroup& big, const Subfield& l,
                               const AutGroup& small) {
  RestrictionMap rm;
  rm.map.assign(static_cast<std::size_t>(big.order()), -1);
  for (int s = 0; s < big.order(); ++s) {
    FElem y = apply_aut(big, s, l.gen_in_big);
    auto in_l = to_subfield(l, y);
    if (!in_l) continue;
    // match against the automorphisms of L: sigma|_L sends gen to *in_l
    int found = -1;
    for (int t = 0; t < small.order(); ++t)
      if (small.images[static_cast<std::size_t>(t)] == *in_l) { found = t; break; }
    if (found < 0)
      fail("InternalError", "restriction lands outside the provided Aut group");
    rm.domain.push_back(s);
    rm.map[static_cast<std::size_t>(s)] = found;
  }
  return rm;
}

bool normalizer_model_check(const std::shared_ptr<const AbsField>& l, int degree_cap) {
  SplittingField lhat = splitting_field(l->minpoly, degree_cap);
  AutGroup g = galois_group(lhat);
  Subfield sub{l, lhat.roots[0]};  // canonical embedding: the least root

  // Gal(L-hat/L): pointwise stabilizer of the embedded generator
  std::vector<int> s;
  for (int e = 0; e < g.order(); ++e)
    if (apply_aut(g, e, sub.gen_in_big) == sub.gen_in_big) s.push_back(e);
  std::vector<int> h = normalizer(g.group, s);

  AutGroup aut_l = automorphism_group(l);
  if (static_cast<int>(h.size() / s.size()) != aut_l.order()) return false;

  // the restriction on H must be a surjective homomorphism with kernel Gal(L-hat/L)
  RestrictionMap rm = restriction_map(g, sub, aut_l);
  // domain must contain H (and in fact equal it: setwise stabilizer = normalizer)
  if (rm.domain != h) return false;
  auto [hg, hinc] = subgroup_as_group(g.group, h);
  GroupHom res{hg, aut_l.group, {}};
  for (int e : h) res.map.push_back(rm.map[static_cast<std::size_t>(e)]);
  if (!res.is_hom() || !res.is_surjective()) return false;
  if (res.kernel_elements().size() != s.size()) return false;
  return true;
}

bool linear_disjointness_check(const FElem& a, const FElem& b) {
  if (a.field()->minpoly != b.field()->minpoly)
    fail("NotEmbedded", "elements live in different fields");
  int da = minpoly_of(a).degree();
  int db = minpoly_of(b).degree();
  int n = a.field()->degree();
  RatMat rows;
  FElem pa = FElem::from_rat(a.field(), 1);
  for (int i = 0; i < da; ++i) {
    FElem pb = pa;
    for (int j = 0; j < db; ++j) {
      rows.push_back(coords(pb));
      pb = pb * b;
    }
    pa = pa * a;
  }
  (void)n;
  return rank(rows) == da * db;
}

Subfield fixed_field(const AutGroup& aut, const std::vector<int>& subgroup_ids,
                     const std::string& label) {
  if (!aut.group.is_subgroup(subgroup_ids))
    fail("NotASubgroup", "fixed field needs a subgroup");
  int n = aut.field->degree();
  int target_deg = n / static_cast<int>(subgroup_ids.size());
  // stack (M_sigma - I) over all sigma in the subgroup
  RatMat stacked;
  for (int s : subgroup_ids) {
    if (s == 0) continue;
    // columns: coords of sigma(gamma^j) = images[s]^j
    RatMat m(static_cast<std::size_t>(n), RatVec(static_cast<std::size_t>(n), Rat(0)));
    FElem pw = FElem::from_rat(aut.field, 1);
    for (int j = 0; j < n; ++j) {
      RatVec col = coords(pw);
      for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col[static_cast<std::size_t>(i)];
      pw = pw * aut.images[static_cast<std::size_t>(s)];
    }
    for (int i = 0; i < n; ++i) {
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] -= 1;
      stacked.push_back(m[static_cast<std::size_t>(i)]);
    }
  }
  std::vector<RatVec> basis;
  if (stacked.empty()) {
    for (int j = 0; j < n; ++j) {
      RatVec v(static_cast<std::size_t>(n), Rat(0));
      v[static_cast<std::size_t>(j)] = 1;
      basis.push_back(std::move(v));
    }
  } else {
    basis = nullspace(stacked);
  }
  if (static_cast<int>(basis.size()) != target_deg)
    fail("InternalError", "fixed-space dimension mismatch");

  auto vec_to_elem = [&](const RatVec& v) {
    return FElem(aut.field, QPoly(std::vector<Rat>(v.begin(), v.end())));
  };
  // primitive element: deterministic weighted combinations of the basis
  for (long c = 0; c <= 200; ++c) {
    FElem cand = FElem::from_rat(aut.field, 0);
    Rat w = 1;
    for (const auto& bvec : basis) {
      cand = cand + vec_to_elem(bvec) * w;
      w *= Rat(c + 1);
    }
    QPoly mp = minpoly_of(cand);
    if (mp.degree() == target_deg) {
      Subfield sub;
      sub.field = target_deg == 1 ? AbsField::rationals() : AbsField::make(mp, label);
      sub.gen_in_big = target_deg == 1 ? FElem::from_rat(aut.field, 0) : cand;
      if (target_deg == 1) sub.gen_in_big = FElem::from_rat(aut.field, 0);
      return sub;
    }
  }
  fail("InternalError", "no primitive element for the fixed field found");
}

// ---------------------------------------------------------------------------
// Coefficient descent over Q(s).
// ---------------------------------------------------------------------------

namespace {

FTPoly ft_mod(const FTPoly& a, const FTPoly& m) { return ftpoly_divmod(a, m).second; }

FTPoly ft_compose_mod(const FTPoly& f, const FTPoly& inner, const FTPoly& m) {
  FTPoly acc;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    acc = ftpoly_mul(acc, inner);
    FTPoly c{*it};
    acc = ft_mod(ftpoly_sub(acc, ftpoly_sub(FTPoly{}, c)), m);  // acc + c
  }
  return acc;
}

bool ratfunc_uses_var(const RatFunc& r) {
  return r.num().degree() > 0 || r.den().degree() > 0;
}

}  // namespace

DescentResult coefficient_descent(const DescentInput& in) {
  FTPoly m = bipoly_to_ftpoly(in.minpoly);
  int n = ftpoly_deg(m);
  if (n < 1) fail("DegreeTooLow", "descent needs a nontrivial extension");
  if (static_cast<int>(in.conjugates.size()) != n)
    fail("NotGalois", "conjugate count differs from the extension degree");

  // each P_i(x) must be a root of the minimal polynomial mod m
  std::vector<FTPoly> values;
  for (const auto& p : in.conjugates) {
    FTPoly img = ft_mod(p, m);
    FTPoly chk = ft_compose_mod(m, img, m);
    if (!chk.empty()) fail("NotGalois", "listed conjugate is not a root");
    values.push_back(std::move(img));
  }
  // distinctness
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (ftpoly_sub(values[i], values[j]).empty())
        fail("NotGalois", "conjugate expressions coincide");

  DescentResult out;
  auto scan = [&](const FTPoly& p) {
    for (const auto& c : p)
      if (ratfunc_uses_var(c)) out.coefficients_use_s = true;
  };
  for (const auto& p : in.conjugates) scan(p);
  scan(in.generator_expr);
  // the defining polynomial's coefficients count as well
  for (int i = 0; i <= in.minpoly.degree_X(); ++i)
    if (in.minpoly.coeff_X(i).degree() > 0) out.coefficients_use_s = true;
  out.field_of_definition = out.coefficients_use_s ? "Q(s)" : "Q";
  return out;
}

}  // namespace regal
