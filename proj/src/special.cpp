#include "regal/special.hpp"

#include "regal/errors.hpp"
#include "regal/tower.hpp"

namespace regal {

BiPoly monic_integral_model(const BiPoly& f) {
  int n = f.degree_X();
  if (n < 0) fail("CheckFailed", "cannot normalize the zero polynomial");
  QPoly c = f.lc_X();
  if (c.is_one()) return f;
  if (c.is_zero()) fail("CheckFailed", "zero leading coefficient");
  // g = c^{n-1} f(T, X/c): coefficient of X^i becomes a_i c^{n-1-i}
  std::vector<QPoly> out(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    QPoly a = f.coeff_X(i);
    for (int j = 0; j < n - 1 - i; ++j) a = a * c;
    out[static_cast<std::size_t>(i)] = a;
  }
  out[static_cast<std::size_t>(n)] = QPoly::constant(1);
  BiPoly g{std::move(out)};
  if (!g.lc_X().is_one()) fail("NotIntegral", "monic rescaling failed");
  return g;
}

SpecializationReport specialize(const BiPoly& ehat_defining, const Rat& t,
                                std::optional<int> expected_closure_degree,
                                int degree_cap) {
  BiPoly g = monic_integral_model(ehat_defining);
  const int n = g.degree_X();
  SpecializationReport rep;
  rep.t = t;
  rep.expected_closure_degree = expected_closure_degree;
  rep.specialized = g.eval_T(t);
  rep.full_degree = (rep.specialized.degree() == n);
  rep.separable = rep.full_degree && is_squarefree_over_Q(rep.specialized);
  rep.irreducible = rep.separable && is_irreducible_over_Q(rep.specialized);
  if (!rep.irreducible) {
    if (!rep.specialized.is_zero())
      rep.factorization = factor_over_Q(rep.specialized);
    rep.accepted = false;
    return rep;
  }
  SplittingField sf = splitting_field(rep.specialized, degree_cap);
  rep.ehat_t = sf.field;
  rep.roots = sf.roots;
  rep.closure_degree = sf.field->degree();
  rep.degree_preserved = !expected_closure_degree ||
                         rep.closure_degree == *expected_closure_degree;
  rep.accepted = rep.degree_preserved;
  return rep;
}

HilbertResult hilbert_search(const std::vector<BiPoly>& polys, int budget) {
  if (polys.empty()) fail("CheckFailed", "hilbert_search needs a polynomial");
  std::vector<BiPoly> models;
  for (const auto& p : polys) models.push_back(monic_integral_model(p));
  HilbertResult res;
  for (std::size_t i = 0;; ++i) {
    Int ti = canonical_int(i);
    if (abs(ti) > budget) break;
    Rat t(ti);
    std::string reason;
    for (const auto& g : models) {
      QPoly pt = g.eval_T(t);
      if (pt.degree() != g.degree_X()) {
        reason = "degree drop in " + g.str();
        break;
      }
      if (!is_squarefree_over_Q(pt)) {
        reason = pt.str() + " is inseparable";
        break;
      }
      if (!is_irreducible_over_Q(pt)) {
        reason = pt.str() + " factors over Q";
        break;
      }
    }
    if (reason.empty()) {
      res.t = t;
      return res;
    }
    res.rejections.push_back({t, "t = " + rat_str(t) + ": " + reason});
  }
  std::string msg = "no acceptable point with |t| <= " + std::to_string(budget);
  for (const auto& r : res.rejections) msg += "; " + r.reason;
  fail("BudgetExhausted", msg);
}

std::optional<Rat> constant_extension_witness(
    const std::shared_ptr<const AbsField>& k, const BiPoly& f, int budget) {
  const int n = f.degree_X();
  for (int i = 0; i < budget; ++i) {
    Rat z = Rat(canonical_int(static_cast<std::size_t>(i)));
    QPoly fz = f.eval_T(z);
    if (fz.degree() != n) continue;
    if (k->is_rational()) {
      if (is_irreducible_over_Q(fz)) return z;
    } else if (is_irreducible_over_field(k, kp_from_qpoly(k, fz))) {
      return z;
    }
  }
  return std::nullopt;
}

const std::vector<QPoly>& regularity_battery() {
  static const std::vector<QPoly> fields = {
      QPoly::from_int_coeffs({1, 0, 1}),   // Q(i)
      QPoly::from_int_coeffs({-2, 0, 1}),  // Q(sqrt 2)
      QPoly::from_int_coeffs({2, 0, 1}),   // Q(sqrt -2)
      QPoly::from_int_coeffs({-3, 0, 1}),  // Q(sqrt 3)
      QPoly::from_int_coeffs({3, 0, 1}),   // Q(sqrt -3)
      QPoly::from_int_coeffs({-5, 0, 1}),  // Q(sqrt 5)
      QPoly::from_int_coeffs({1, 1, 1}),   // Q(zeta_3)
  };
  return fields;
}

RegularityVerdict regularity_spot_check(const BiPoly& f,
                                        const std::vector<QPoly>& extra_minpolys,
                                        int budget) {
  RegularityVerdict v;
  BiPoly g = monic_integral_model(f);
  std::vector<QPoly> minpolys = regularity_battery();
  for (const auto& mp : extra_minpolys) minpolys.push_back(mp);
  v.proxy_regular = true;
  for (const QPoly& mp : minpolys) {
    CheckItem item;
    item.name = "Q[a]/(" + mp.str("a") + ")";
    if (mp.degree() <= 1) {
      // the rationals themselves: generic irreducibility, same witness idea
      auto w = constant_extension_witness(AbsField::rationals(), g, budget);
      item.ok = w.has_value();
      if (w) item.detail = "witness t = " + rat_str(*w);
    } else {
      auto k = AbsField::make(mp, "a");
      auto w = constant_extension_witness(k, g, budget);
      item.ok = w.has_value();
      if (w)
        item.detail = "witness t = " + rat_str(*w);
      else
        item.detail = "no irreducible specialization found";
    }
    v.proxy_regular = v.proxy_regular && item.ok;
    v.fields.push_back(std::move(item));
  }
  return v;
}

}  // namespace regal
