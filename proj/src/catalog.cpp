#include "regal/catalog.hpp"

#include <json.hpp>

#include "regal/errors.hpp"
#include "regal/expr.hpp"
#include "regal/numfield.hpp"
#include "regal/qfactor.hpp"
#include "regal/special.hpp"
#include "regal/tower.hpp"

namespace regal {

namespace {

// p(arg) for a univariate p, with the argument a bivariate polynomial.
BiPoly qsubst(const QPoly& p, const BiPoly& arg) {
  BiPoly acc;
  for (int i = p.degree(); i >= 0; --i)
    acc = acc * arg + BiPoly({QPoly::constant(p.coeff(i))});
  return acc;
}

// TRUE iff p is a square in Q[Z] (up to nothing: exact squareness).
bool qpoly_is_square(const QPoly& p) {
  if (p.is_zero()) return true;
  if (!rat_is_square(p.lc())) return false;
  for (const auto& [part, mult] : squarefree_decomposition(p))
    if (mult % 2 == 1 && part.degree() >= 1) return false;
  return true;
}

// Minimal polynomial over Q(Z) of (root of quad) + (root of cubic), where
// both inputs are monic in X with coefficients in Q[Z]:
// Res_Y(quad(Z,Y), cubic(Z, X - Y)), computed per Z-specialization and
// interpolated. The result is monic of degree (deg quad)*(deg cubic).
BiPoly compositum_polynomial(const BiPoly& quad, const BiPoly& cubic) {
  int n = quad.degree_X() * cubic.degree_X();
  // Z-degree bound for the Sylvester determinant.
  int zbound = quad.degree_T() * cubic.degree_X() +
               cubic.degree_T() * quad.degree_X() + cubic.degree_T();
  std::vector<Rat> zs;
  std::vector<QPoly> vals;  // resultant in the new main variable, per z
  std::size_t idx = 0;
  while (static_cast<int>(zs.size()) <= zbound) {
    Rat z = Rat(canonical_int(idx++));
    // roles swapped: the parameter slot holds the new main variable X,
    // the main slot holds the eliminated variable Y
    BiPoly gy = BiPoly::from_qpoly_in_X(quad.eval_T(z));
    BiPoly hy = qsubst(cubic.eval_T(z), BiPoly::T() - BiPoly::X());
    zs.push_back(z);
    vals.push_back(bipoly_resultant_X(gy, hy));
  }
  std::vector<QPoly> coeffs(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    std::vector<Rat> ys;
    for (const QPoly& v : vals) ys.push_back(v.coeff(j));
    coeffs[static_cast<std::size_t>(j)] = lagrange_interpolate(zs, ys);
  }
  // reassemble with X-coefficient j a polynomial in Z
  std::vector<QPoly> xc = std::move(coeffs);
  BiPoly out{std::move(xc)};
  if (out.degree_X() != n || !out.lc_X().is_one())
    fail("InternalError", "compositum polynomial is not monic of full degree");
  return out;
}

// Resolvent cubic of a monic quartic X^4 + pX^2 + qX + r over Q[Z]:
// X^3 - pX^2 - 4rX + (4pr - q^2).
BiPoly resolvent_cubic(const BiPoly& f) {
  if (f.degree_X() != 4 || !f.lc_X().is_one() || !f.coeff_X(3).is_zero())
    fail("CheckFailed", "resolvent recipe needs a depressed monic quartic");
  QPoly p = f.coeff_X(2), q = f.coeff_X(1), r = f.coeff_X(0);
  BiPoly X = BiPoly::X();
  BiPoly out = X * X * X - BiPoly::from_qpoly_in_T(p) * X * X -
               BiPoly::from_qpoly_in_T(r * rat(4)) * X +
               BiPoly::from_qpoly_in_T(p * r * rat(4) - q * q);
  return out;
}

struct RootMapInfo {
  bool valid = false;
  int order = 0;  // order of the induced automorphism; 0 when invalid
  bool is_identity = false;
  FTPoly rep;     // polynomial representative mod the entry polynomial
};

RootMapInfo analyze_root_map(const FTPoly& f, const std::string& num_s,
                             const std::string& den_s) {
  RootMapInfo info;
  FTPoly num = bipoly_to_ftpoly(parse_bipoly(num_s, "Z", "X"));
  FTPoly den = bipoly_to_ftpoly(parse_bipoly(den_s, "Z", "X"));
  FTPoly r = ftpoly_mulmod(num, ftpoly_invmod(den, f), f);
  if (!ftpoly_compose_mod(f, r, f).empty()) return info;  // not a root map
  info.valid = true;
  info.rep = r;
  FTPoly x = {RatFunc(Rat(0)), RatFunc(Rat(1))};
  FTPoly it = r;
  int ord = 1;
  while (it != x && ord <= ftpoly_deg(f)) {
    it = ftpoly_compose_mod(it, r, f);
    ++ord;
  }
  info.order = (it == x) ? ord : 0;
  info.is_identity = (r == x);
  return info;
}

void add_check(CatalogVerdict& v, const std::string& name, bool ok,
               const std::string& detail) {
  v.checks.push_back({name, ok, detail});
}

}  // namespace

std::vector<RealizationEntry> builtin_catalog() {
  std::vector<RealizationEntry> cat;
  auto add = [&cat](std::string name, FiniteGroup g, BiPoly poly,
                    std::vector<std::pair<std::string, std::string>> maps,
                    std::string notes) {
    RealizationEntry e;
    e.name = std::move(name);
    e.group = std::move(g);
    e.poly = std::move(poly);
    e.root_maps = std::move(maps);
    e.notes = std::move(notes);
    cat.push_back(std::move(e));
  };
  auto P = [](const char* s) { return parse_bipoly(s, "Z", "X"); };

  add("C1", FiniteGroup::trivial(), P("X - Z"), {},
      "the base function field itself");
  add("C2", FiniteGroup::cyclic(2), P("X^2 - Z"), {{"-X", "1"}},
      "square root of the parameter");
  add("C3", FiniteGroup::cyclic(3), P("X^3 - Z*X^2 - (Z + 3)*X - 1"),
      {{"-1", "X + 1"}},
      "simplest cubic family; discriminant (Z^2 + 3Z + 9)^2 is a square");
  add("C4", FiniteGroup::cyclic(4), P("X^4 - Z*X^3 - 6*X^2 + Z*X + 1"),
      {{"X - 1", "X + 1"}}, "simplest quartic family with an order-4 root map");
  add("V4", FiniteGroup::from_literal("V4"), P("X^4 - (4*Z + 2)*X^2 + 1"),
      {{"-X", "1"}, {"(4*Z + 2)*X - X^3", "1"}, {"X^3 - (4*Z + 2)*X", "1"}},
      "sqrt(Z) + sqrt(Z+1); palindromic and even, three involutive root maps");
  add("S3", FiniteGroup::symmetric(3), P("X^3 + Z*X + Z"),
      {}, "trinomial family; discriminant -Z^2(4Z + 27) is not a square");
  {
    BiPoly c6 =
        compositum_polynomial(P("X^2 - Z"), P("X^3 - Z*X^2 - (Z + 3)*X - 1"));
    add("C6", FiniteGroup::cyclic(6), std::move(c6), {},
        "compositum of the C2 and C3 entries; coprime cyclic degrees");
  }
  add("S4", FiniteGroup::symmetric(4), P("X^4 + Z*X + Z"), {},
      "quartic trinomial; irreducible resolvent cubic and non-square "
      "discriminant");
  return cat;
}

const RealizationEntry* find_entry(const std::vector<RealizationEntry>& cat,
                                   const FiniteGroup& g) {
  for (const auto& e : cat)
    if (e.group.order == g.order && is_isomorphic(e.group, g).has_value())
      return &e;
  return nullptr;
}

const RealizationEntry* find_entry_by_name(
    const std::vector<RealizationEntry>& cat, const std::string& name) {
  for (const auto& e : cat)
    if (e.name == name) return &e;
  return nullptr;
}

CatalogVerdict catalog_self_check(const RealizationEntry& entry) {
  CatalogVerdict v;
  v.entry = entry.name;
  const BiPoly& f = entry.poly;
  const int n = entry.group.order;

  // shape: validated group, monic polynomial of degree |G| in X
  bool shape_ok = true;
  std::string shape_detail;
  try {
    entry.group.validate();
  } catch (const Error& e) {
    shape_ok = false;
    shape_detail = e.what();
  }
  // the group is realized on the splitting field, so the polynomial degree
  // divides the group order (equality exactly when the root field is Galois)
  const int d = f.degree_X();
  if (d < 1 || !f.lc_X().is_one() || d > n || n % d != 0) {
    shape_ok = false;
    shape_detail = "polynomial must be monic in X of degree dividing |G| = " +
                   std::to_string(n);
  }
  add_check(v, "shape", shape_ok, shape_detail);
  if (!shape_ok) return v;

  // irreducibility over Q(Z)
  bool irr_ok = false;
  std::string irr_detail;
  if (d == 1) {
    irr_ok = true;
    irr_detail = "degree 1";
  } else {
    try {
      auto w = is_irreducible_over_QT(f);
      irr_ok = w.irreducible;
      if (w.witness_t)
        irr_detail = "witness Z = " + rat_str(*w.witness_t);
      else if (!w.irreducible)
        irr_detail = "polynomial factors over Q(Z)";
    } catch (const Error& e) {
      irr_detail = e.what();
    }
  }
  add_check(v, "irreducible-over-QZ", irr_ok, irr_detail);

  // every supplied root map must actually permute the roots
  std::vector<RootMapInfo> maps;
  bool maps_ok = true;
  std::string maps_detail;
  if (!entry.root_maps.empty() && n > 1) {
    FTPoly ff = bipoly_to_ftpoly(f);
    for (const auto& [num, den] : entry.root_maps) {
      RootMapInfo info;
      try {
        info = analyze_root_map(ff, num, den);
      } catch (const Error& e) {
        maps_ok = false;
        maps_detail = e.what();
        break;
      }
      if (!info.valid) {
        maps_ok = false;
        maps_detail = "(" + num + ")/(" + den + ") is not a root map";
        break;
      }
      maps.push_back(std::move(info));
    }
  }
  add_check(v, "root-maps", maps_ok,
            maps_ok ? std::to_string(maps.size()) + " map(s) verified"
                    : maps_detail);

  // Galois-group certificate, by entry shape
  bool gal_ok = false;
  std::string gal_detail;
  FiniteGroup named;
  bool have_named = true;
  try {
    named = FiniteGroup::from_literal(entry.name);
  } catch (const Error&) {
    have_named = false;
  }
  if (have_named && !is_isomorphic(named, entry.group).has_value()) {
    gal_detail = "entry group does not match the name " + entry.name;
  } else if (entry.name == "C1") {
    gal_ok = true;
    gal_detail = "trivial extension";
  } else if (entry.name == "C2") {
    gal_ok = irr_ok;
    gal_detail = "every separable quadratic extension is cyclic";
  } else if (entry.name == "C3") {
    QPoly disc = bipoly_discriminant_X(f);
    gal_ok = irr_ok && qpoly_is_square(disc);
    gal_detail = gal_ok ? "square discriminant forces the alternating group"
                        : "discriminant is not a square in Q[Z]";
  } else if (entry.name == "C4") {
    bool found = false;
    for (const auto& m : maps) found = found || (m.order == 4);
    gal_ok = irr_ok && maps_ok && found;
    gal_detail = gal_ok ? "order-4 root map makes the root field cyclic"
                        : "no order-4 root map supplied";
  } else if (entry.name == "V4") {
    int involutions = 0;
    for (const auto& m : maps)
      if (!m.is_identity && m.order == 2) ++involutions;
    bool distinct = true;
    for (std::size_t i = 0; i < maps.size(); ++i)
      for (std::size_t j = i + 1; j < maps.size(); ++j)
        if (maps[i].rep == maps[j].rep) distinct = false;
    gal_ok = irr_ok && maps_ok && distinct && involutions >= 3;
    gal_detail = gal_ok ? "three distinct involutive root maps"
                        : "need three distinct involutive root maps";
  } else if (entry.name == "S3") {
    QPoly disc = bipoly_discriminant_X(f);
    gal_ok = irr_ok && !qpoly_is_square(disc);
    gal_detail = gal_ok
                     ? "non-square discriminant rules out the cyclic cubic"
                     : "discriminant is a square in Q[Z]";
  } else if (entry.name == "C6") {
    BiPoly expect = compositum_polynomial(
        parse_bipoly("X^2 - Z", "Z", "X"),
        parse_bipoly("X^3 - Z*X^2 - (Z + 3)*X - 1", "Z", "X"));
    gal_ok = irr_ok && (f == expect);
    gal_detail = gal_ok ? "compositum of the certified C2 and C3 entries, "
                          "coprime degrees"
                        : "polynomial is not the shipped C2 x C3 compositum";
  } else if (entry.name == "S4") {
    bool res_irr = false;
    std::string res_note;
    try {
      BiPoly res = resolvent_cubic(f);
      auto w = is_irreducible_over_QT(res);
      res_irr = w.irreducible;
    } catch (const Error& e) {
      res_note = e.what();
    }
    QPoly disc = bipoly_discriminant_X(f);
    gal_ok = irr_ok && res_irr && !qpoly_is_square(disc);
    gal_detail = gal_ok ? "irreducible resolvent cubic and non-square "
                          "discriminant"
                        : ("resolvent/discriminant criterion failed " + res_note);
  } else {
    gal_detail = "no verification recipe for entry '" + entry.name + "'";
  }
  add_check(v, "galois-certificate", gal_ok, gal_detail);

  // independent sample: specialize and compute the Galois group exactly
  bool samp_ok = false;
  std::string samp_detail;
  if (n == 1) {
    samp_ok = true;
    samp_detail = "trivial";
  } else if (entry.name == "S4") {
    // the degree-24 splitting field is out of sampling range; apply the
    // quartic resolvent criterion to a specialization instead
    for (int i = 0; i < 60 && !samp_ok; ++i) {
      Rat z = Rat(canonical_int(static_cast<std::size_t>(i)));
      QPoly fz = f.eval_T(z);
      if (fz.degree() != 4 || !is_irreducible_over_Q(fz)) continue;
      QPoly rz = resolvent_cubic(f).eval_T(z);
      if (rz.degree() == 3 && is_irreducible_over_Q(rz) &&
          !rat_is_square(fz.discriminant())) {
        samp_ok = true;
        samp_detail = "Z = " + rat_str(z) +
                      ": specialized resolvent irreducible, non-square "
                      "discriminant";
      }
    }
    if (!samp_ok) samp_detail = "no certifying specialization found";
  } else {
    for (int i = 0; i < 60 && !samp_ok; ++i) {
      Rat z = Rat(canonical_int(static_cast<std::size_t>(i)));
      QPoly fz = f.eval_T(z);
      if (fz.degree() != d || !is_squarefree_over_Q(fz) ||
          !is_irreducible_over_Q(fz))
        continue;
      SplittingField sf = splitting_field(fz);
      if (sf.field->degree() != n) continue;  // bad point: degree dropped
      AutGroup g = galois_group(sf);
      if (is_isomorphic(g.group, entry.group).has_value()) {
        samp_ok = true;
        samp_detail = "Z = " + rat_str(z) + ": specialized Galois group " +
                      "computed and matched";
      }
    }
    if (!samp_ok) samp_detail = "no matching specialization found";
  }
  add_check(v, "specialization-sample", samp_ok, samp_detail);

  // constant-field battery: the polynomial stays irreducible over small
  // quadratic and cyclotomic constant extensions
  bool bat_ok = true;
  std::string bat_detail;
  if (d > 1) {
    RegularityVerdict rv = regularity_spot_check(f);
    bat_ok = rv.proxy_regular;
    if (!bat_ok)
      for (const auto& item : rv.fields)
        if (!item.ok) bat_detail = "no witness over " + item.name;
  }
  add_check(v, "constant-field-battery", bat_ok,
            bat_ok ? std::to_string(regularity_battery().size()) +
                         " extension(s) checked"
                   : bat_detail);

  v.pass = true;
  for (const auto& c : v.checks) v.pass = v.pass && c.ok;
  return v;
}

std::vector<RealizationEntry> catalog_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail("ParseError", std::string("bad catalog JSON: ") + e.what());
  }
  if (!j.is_array()) fail("ParseError", "catalog JSON must be an array");
  std::vector<RealizationEntry> cat;
  for (const auto& je : j) {
    RealizationEntry e;
    try {
      e.name = je.at("name").get<std::string>();
      int order = je.at("order").get<int>();
      if (je.contains("standard_name")) {
        e.group = FiniteGroup::from_literal(je["standard_name"].get<std::string>());
      } else {
        e.group.name = e.name;
        e.group.order = order;
        e.group.table = je.at("cayley_table").get<std::vector<std::vector<int>>>();
        e.group.validate();
      }
      if (e.group.order != order)
        fail("ParseError", "entry '" + e.name + "': order mismatch");
      e.poly = parse_bipoly(je.at("polynomial").get<std::string>(), "Z", "X");
      if (je.contains("root_maps"))
        for (const auto& m : je["root_maps"])
          e.root_maps.emplace_back(m.at(0).get<std::string>(),
                                   m.at(1).get<std::string>());
      if (je.contains("notes")) e.notes = je["notes"].get<std::string>();
    } catch (const nlohmann::json::exception& ex) {
      fail("ParseError", std::string("bad catalog entry: ") + ex.what());
    }
    cat.push_back(std::move(e));
  }
  return cat;
}

std::string catalog_to_json_text(const std::vector<RealizationEntry>& entries) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json je;
    je["name"] = e.name;
    je["order"] = e.group.order;
    bool standard = false;
    if (!e.group.name.empty()) {
      try {
        standard = FiniteGroup::from_literal(e.group.name).same_table(e.group);
      } catch (const Error&) {
      }
    }
    if (standard)
      je["standard_name"] = e.group.name;
    else
      je["cayley_table"] = e.group.table;
    je["polynomial"] = e.poly.str("Z", "X");
    if (!e.root_maps.empty()) {
      nlohmann::json maps = nlohmann::json::array();
      for (const auto& [num, den] : e.root_maps)
        maps.push_back(nlohmann::json::array({num, den}));
      je["root_maps"] = maps;
    }
    if (!e.notes.empty()) je["notes"] = e.notes;
    j.push_back(std::move(je));
  }
  return j.dump(2);
}

KilledTower kill_automorphisms(const RealizationEntry& entry, const Rat& y) {
  KilledTower kt;
  kt.entry = entry;
  kt.y = y;
  kt.gadget = make_gadget(y);
  const int d = entry.poly.degree_X();
  const int n = entry.group.order;  // [N : Q(Z)] for the Galois field N
  if (d < 1 || !entry.poly.lc_X().is_one())
    fail("CheckFailed", "entry polynomial must be monic in X");
  kt.group_degree = n;
  kt.total_degree = 3 * n;

  // specialize the entry to a degree-n number field (the splitting field of
  // the specialized polynomial when the root field itself is not Galois)
  std::shared_ptr<const AbsField> n0;
  if (n == 1) {
    n0 = AbsField::rationals();
    kt.z_witness = 0;
  } else {
    bool found = false;
    for (int i = 0; i < 60 && !found; ++i) {
      Rat z = Rat(canonical_int(static_cast<std::size_t>(i)));
      QPoly fz = entry.poly.eval_T(z);
      if (fz.degree() != d || !is_squarefree_over_Q(fz) ||
          !is_irreducible_over_Q(fz))
        continue;
      if (d == n) {
        n0 = AbsField::make(fz, "w");
      } else {
        SplittingField sf = splitting_field(fz);
        if (sf.field->degree() != n) continue;
        n0 = sf.field;
      }
      kt.z_witness = z;
      found = true;
    }
    if (!found)
      fail("BudgetExhausted",
           "no irreducible specialization of the catalog entry found");
  }

  // [E : N(T)] = 3: the trinomial stays irreducible over N(T), witnessed by
  // a T-specialization over the specialized coefficient field
  bool found_t = false;
  for (int i = 0; i < 40 && !found_t; ++i) {
    Rat t = Rat(canonical_int(static_cast<std::size_t>(i)));
    QPoly gt = kt.gadget.poly.eval_T(t);
    if (gt.degree() != 3) continue;
    if (is_irreducible_over_field(n0, kp_from_qpoly(n0, gt))) {
      kt.t_witness = t;
      found_t = true;
    }
  }
  if (!found_t)
    fail("GadgetCollapse",
         "trinomial factors over the specialized field at every tested point");
  return kt;
}

}  // namespace regal
