#include "regal/numfield.hpp"

#include <algorithm>
#include <sstream>

#include "regal/errors.hpp"

namespace regal {

std::shared_ptr<const AbsField> AbsField::rationals() {
  static const std::shared_ptr<const AbsField> q = [] {
    auto f = std::make_shared<AbsField>();
    f->minpoly = QPoly::variable();
    f->label = "q";
    return f;
  }();
  return q;
}

std::shared_ptr<const AbsField> AbsField::make(QPoly minpoly, std::string label) {
  if (minpoly.degree() < 1 || minpoly.lc() != 1)
    fail("InvalidField", "defining polynomial must be monic of degree >= 1");
  if (minpoly.degree() > 1 && !is_irreducible_over_Q(minpoly))
    fail("InvalidField", "defining polynomial is reducible");
  auto f = std::make_shared<AbsField>();
  f->minpoly = std::move(minpoly);
  f->label = std::move(label);
  return f;
}

FElem::FElem(std::shared_ptr<const AbsField> field, QPoly rep)
    : field_(std::move(field)), rep_(std::move(rep)) {
  if (rep_.degree() >= field_->degree())
    rep_ = QPoly::divmod(rep_, field_->minpoly).second;
}

FElem FElem::from_rat(std::shared_ptr<const AbsField> field, const Rat& a) {
  return FElem(std::move(field), QPoly::constant(a));
}

FElem FElem::generator(std::shared_ptr<const AbsField> field) {
  return FElem(std::move(field), QPoly::variable());
}

Rat FElem::to_rat() const {
  if (!is_rational()) fail("NotRational", "element is not rational");
  return rep_.coeff(0);
}

void FElem::check_same(const FElem& o) const {
  if (field_.get() != o.field_.get() && field_->minpoly != o.field_->minpoly)
    fail("FieldMismatch", "arithmetic between different fields");
}

FElem FElem::operator+(const FElem& o) const {
  check_same(o);
  return FElem(field_, rep_ + o.rep_);
}

FElem FElem::operator-(const FElem& o) const {
  check_same(o);
  return FElem(field_, rep_ - o.rep_);
}

FElem FElem::operator-() const { return FElem(field_, -rep_); }

FElem FElem::operator*(const FElem& o) const {
  check_same(o);
  return FElem(field_, rep_ * o.rep_);
}

FElem FElem::operator*(const Rat& a) const { return FElem(field_, rep_ * a); }

FElem FElem::inv() const {
  if (is_zero()) fail("DivisionByZero", "inverse of zero field element");
  QPoly s, t;
  QPoly g = QPoly::xgcd(rep_, field_->minpoly, s, t);
  if (g.degree() != 0) fail("InvalidField", "defining polynomial not irreducible");
  return FElem(field_, s);
}

FElem FElem::operator/(const FElem& o) const { return *this * o.inv(); }

std::string FElem::str() const { return rep_.str(field_->label); }

// ---------------------------------------------------------------------------
// Polynomials over K.
// ---------------------------------------------------------------------------

int kp_deg(const KPoly& f) {
  int d = static_cast<int>(f.size()) - 1;
  while (d >= 0 && f[static_cast<std::size_t>(d)].is_zero()) --d;
  return d;
}

void kp_trim(KPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

KPoly kp_from_qpoly(const std::shared_ptr<const AbsField>& k, const QPoly& f) {
  KPoly r;
  for (int i = 0; i <= f.degree(); ++i) r.push_back(FElem::from_rat(k, f.coeff(i)));
  kp_trim(r);
  return r;
}

KPoly kp_add(const KPoly& a, const KPoly& b) {
  KPoly r = a.size() >= b.size() ? a : b;
  const KPoly& s = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < s.size(); ++i) r[i] = r[i] + s[i];
  kp_trim(r);
  return r;
}

KPoly kp_sub(const KPoly& a, const KPoly& b) {
  KPoly nb;
  for (const auto& v : b) nb.push_back(-v);
  return kp_add(a, nb);
}

KPoly kp_mul(const KPoly& a, const KPoly& b) {
  if (a.empty() || b.empty()) return {};
  KPoly r(a.size() + b.size() - 1, FElem::from_rat(a[0].field(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  kp_trim(r);
  return r;
}

KPoly kp_scale(const KPoly& a, const FElem& c) {
  KPoly r;
  for (const auto& v : a) r.push_back(v * c);
  kp_trim(r);
  return r;
}

std::pair<KPoly, KPoly> kp_divmod(const KPoly& a, const KPoly& b) {
  int db = kp_deg(b);
  if (db < 0) fail("DivisionByZero", "polynomial division by zero");
  KPoly r = a;
  kp_trim(r);
  KPoly q(a.size(), FElem::from_rat(b[0].field(), 0));
  FElem inv = b[static_cast<std::size_t>(db)].inv();
  while (kp_deg(r) >= db) {
    int dr = kp_deg(r);
    int k = dr - db;
    FElem f = r[static_cast<std::size_t>(dr)] * inv;
    q[static_cast<std::size_t>(k)] = f;
    for (int i = 0; i <= db; ++i)
      r[static_cast<std::size_t>(i + k)] =
          r[static_cast<std::size_t>(i + k)] - f * b[static_cast<std::size_t>(i)];
    kp_trim(r);
  }
  kp_trim(q);
  return {q, r};
}

KPoly kp_gcd(const KPoly& a, const KPoly& b) {
  KPoly f = a, g = b;
  kp_trim(f);
  kp_trim(g);
  while (!g.empty()) {
    KPoly r = kp_divmod(f, g).second;
    f = std::move(g);
    g = std::move(r);
  }
  return f.empty() ? f : kp_monic(f);
}

KPoly kp_derivative(const KPoly& f) {
  KPoly r;
  for (std::size_t i = 1; i < f.size(); ++i)
    r.push_back(f[i] * Rat(static_cast<long>(i)));
  kp_trim(r);
  return r;
}

KPoly kp_monic(const KPoly& f) {
  int d = kp_deg(f);
  if (d < 0) return f;
  return kp_scale(f, f[static_cast<std::size_t>(d)].inv());
}

FElem kp_eval(const KPoly& f, const FElem& x) {
  FElem acc = FElem::from_rat(x.field(), 0);
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

KPoly kp_compose(const KPoly& f, const KPoly& inner) {
  if (f.empty()) return {};
  KPoly acc;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    acc = kp_mul(acc, inner);
    acc = kp_add(acc, KPoly{*it});
  }
  return acc;
}

std::string kp_str(const KPoly& f, const std::string& var) {
  if (f.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = kp_deg(f); i >= 0; --i) {
    const FElem& c = f[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << "(" << c.str() << ")";
    } else {
      os << "(" << c.str() << ")*" << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

bool kp_order_less(const KPoly& a, const KPoly& b) {
  int da = kp_deg(a), db = kp_deg(b);
  if (da != db) return da < db;
  for (int i = da; i >= 0; --i) {
    const QPoly& ra = a[static_cast<std::size_t>(i)].rep();
    const QPoly& rb = b[static_cast<std::size_t>(i)].rep();
    if (ra != rb) return QPoly::order_less(ra, rb);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Trager factorization.
// ---------------------------------------------------------------------------

namespace {

/// norm_s(f)(X) = Res_Y(g(Y), A(X - sY, Y)) where A(X,Y) has the coefficient
/// representatives of f as Y-polynomials. Computed by interpolation in X.
QPoly trager_norm(const std::shared_ptr<const AbsField>& k, const KPoly& f, const Rat& s) {
  const QPoly& g = k->minpoly;
  int n = kp_deg(f), m = g.degree();
  int bound = n * m;
  std::vector<Rat> xs, ys;
  std::size_t idx = 0;
  while (static_cast<int>(xs.size()) <= bound) {
    Rat x0 = Rat(canonical_int(idx++));
    // B(Y) = sum_i rep_i(Y) * (x0 - sY)^i
    QPoly shift = QPoly::constant(x0) - QPoly::variable() * s;
    QPoly b;
    QPoly pw = QPoly::constant(1);
    for (int i = 0; i <= n; ++i) {
      b = b + f[static_cast<std::size_t>(i)].rep() * pw;
      pw = pw * shift;
    }
    xs.push_back(x0);
    ys.push_back(QPoly::resultant(g, b));
  }
  // Lagrange interpolation
  QPoly acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    QPoly li = QPoly::constant(1);
    Rat denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      li = li * (QPoly::variable() - QPoly::constant(xs[j]));
      denom *= xs[i] - xs[j];
    }
    acc = acc + li * (ys[i] / denom);
  }
  return acc;
}

/// Monic squarefree f over K. Returns monic irreducible factors.
std::vector<KPoly> trager_squarefree(const std::shared_ptr<const AbsField>& k,
                                     const KPoly& f) {
  int n = kp_deg(f);
  if (n == 1) return {f};
  int m = k->degree();
  if (n * m > kFactorDegreeCap)
    fail("DegreeCapExceeded", "norm degree exceeds the factorization cap");
  for (long si = 0;; ++si) {
    if (si > 200) fail("InternalError", "no squarefree norm shift found");
    Rat s(si);
    QPoly norm = trager_norm(k, f, s);
    if (norm.degree() != n * m) continue;
    if (!is_squarefree_over_Q(norm)) continue;
    auto nf = factor_over_Q(norm.monic());
    if (nf.factors.size() == 1) return {f};
    std::vector<KPoly> out;
    KPoly rem = f;
    FElem theta = FElem::generator(k);
    for (const auto& [nk, mult] : nf.factors) {
      // h = gcd(f, N_k(X + s*theta)) over K
      KPoly shifted;
      {
        KPoly inner{theta * s, FElem::from_rat(k, 1)};  // X + s*theta
        shifted = kp_compose(kp_from_qpoly(k, nk), inner);
      }
      KPoly h = kp_gcd(rem, shifted);
      if (kp_deg(h) >= 1) {
        rem = kp_divmod(rem, h).first;
        out.push_back(std::move(h));
      }
    }
    if (kp_deg(rem) != 0)
      fail("InternalError", "norm factor recovery left a remainder");
    std::sort(out.begin(), out.end(), kp_order_less);
    return out;
  }
}

}  // namespace

KFactorList factor_over_number_field(const std::shared_ptr<const AbsField>& k,
                                     const KPoly& f_in) {
  KPoly f = f_in;
  kp_trim(f);
  if (f.empty()) fail("ZeroPolynomial", "cannot factor the zero polynomial");
  KFactorList out;
  out.unit = f[static_cast<std::size_t>(kp_deg(f))];
  if (kp_deg(f) == 0) return out;

  if (k->is_rational()) {
    // delegate to the rational factorizer
    std::vector<Rat> c;
    for (const auto& v : f) c.push_back(v.rep().coeff(0));
    auto fl = factor_over_Q(QPoly(std::move(c)));
    out.unit = FElem::from_rat(k, fl.unit);
    for (auto& [g, m] : fl.factors) out.factors.emplace_back(kp_from_qpoly(k, g), m);
    return out;
  }

  KPoly mono = kp_monic(f);
  // characteristic 0: sf = mono / gcd(mono, mono') carries each irreducible
  // once; multiplicities recovered by repeated exact division
  KPoly g = kp_gcd(mono, kp_derivative(mono));
  KPoly sf = kp_divmod(mono, g).first;
  for (const auto& irr : trager_squarefree(k, sf)) {
    int mult = 0;
    KPoly cur = mono;
    while (true) {
      auto [q, r] = kp_divmod(cur, irr);
      if (!r.empty()) break;
      ++mult;
      cur = std::move(q);
    }
    out.factors.emplace_back(irr, mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return kp_order_less(a.first, b.first); });
  // verification: unit * prod factors^mult == f
  KPoly prod{out.unit};
  for (const auto& [g, m] : out.factors)
    for (int i = 0; i < m; ++i) prod = kp_mul(prod, g);
  KPoly diff = kp_sub(prod, f);
  if (!diff.empty()) fail("InternalError", "field factorization check failed");
  return out;
}

bool is_irreducible_over_field(const std::shared_ptr<const AbsField>& k, const KPoly& f) {
  if (kp_deg(f) < 1) return false;
  auto fl = factor_over_number_field(k, f);
  return fl.factors.size() == 1 && fl.factors[0].second == 1;
}

std::vector<FElem> roots_in_field(const std::shared_ptr<const AbsField>& k, const KPoly& f) {
  auto fl = factor_over_number_field(k, f);
  std::vector<FElem> roots;
  for (const auto& [g, m] : fl.factors)
    if (kp_deg(g) == 1) roots.push_back(-g[0] / g[1]);
  std::sort(roots.begin(), roots.end(), [](const FElem& a, const FElem& b) {
    return QPoly::order_less(a.rep(), b.rep());
  });
  return roots;
}

AdjoinResult adjoin_root(const std::shared_ptr<const AbsField>& k, const KPoly& f,
                         const std::string& label, int degree_cap) {
  int n = kp_deg(f);
  if (n < 1) fail("DegreeTooLow", "adjoin_root needs degree >= 1");
  int m = k->degree();
  if (n * m > degree_cap) fail("DegreeCapExceeded", "absolute degree exceeds the cap");

  KPoly mono = kp_monic(f);
  if (k->is_rational()) {
    std::vector<Rat> c;
    for (const auto& v : mono) c.push_back(v.rep().coeff(0));
    QPoly mp(std::move(c));
    if (!is_irreducible_over_Q(mp)) fail("NotIrreducible", "defining polynomial splits");
    AdjoinResult res;
    res.field = AbsField::make(mp, label);
    res.old_gen_image = QPoly();  // 0: the generator of Q is 0
    res.root_image = QPoly::variable();
    res.mix = 0;
    return res;
  }

  if (n == 1) {
    // root already lies in K
    AdjoinResult res;
    res.field = k;
    res.old_gen_image = QPoly::variable();
    res.root_image = (-mono[0]).rep();
    res.mix = 0;
    return res;
  }

  for (long ci = 1;; ++ci) {
    if (ci > 200) fail("InternalError", "no primitive mixing constant found");
    Rat c(ci);
    QPoly norm = trager_norm(k, mono, c);
    if (norm.degree() != n * m) continue;
    if (!is_squarefree_over_Q(norm)) continue;
    QPoly mp = norm.monic();
    if (!is_irreducible_over_Q(mp)) fail("NotIrreducible", "defining polynomial splits");
    auto big = AbsField::make(mp, label);
    // theta in L: the unique common root of g(Y) and A(gamma - cY, Y) over L
    FElem gamma = FElem::generator(big);
    KPoly gY = kp_from_qpoly(big, k->minpoly);
    // A(gamma - cY, Y): substitute X = gamma - cY into the bivariate lift of f
    KPoly acc;  // polynomial in Y over L
    KPoly shift{gamma, FElem::from_rat(big, Rat(-c))};  // gamma - c*Y
    KPoly pw{FElem::from_rat(big, 1)};
    for (int i = 0; i <= n; ++i) {
      // rep_i(Y) lifted to L[Y]
      KPoly repY = kp_from_qpoly(big, mono[static_cast<std::size_t>(i)].rep());
      acc = kp_add(acc, kp_mul(repY, pw));
      pw = kp_mul(pw, shift);
    }
    KPoly lin = kp_gcd(gY, acc);
    if (kp_deg(lin) != 1) fail("InternalError", "generator recovery gcd not linear");
    FElem theta_l = -lin[0] / lin[1];
    AdjoinResult res;
    res.field = big;
    res.old_gen_image = theta_l.rep();
    res.root_image = (gamma - theta_l * c).rep();
    res.mix = c;
    return res;
  }
}

FElem embed_elem(const FElem& a, const AdjoinResult& ext) {
  FElem gen(ext.field, ext.old_gen_image);
  FElem acc = FElem::from_rat(ext.field, 0);
  const QPoly& r = a.rep();
  for (int i = r.degree(); i >= 0; --i)
    acc = acc * gen + FElem::from_rat(ext.field, r.coeff(i));
  return acc;
}

std::vector<FElem> embeddings(const std::shared_ptr<const AbsField>& k,
                              const std::shared_ptr<const AbsField>& l) {
  return roots_in_field(l, kp_from_qpoly(l, k->minpoly));
}

}  // namespace regal
