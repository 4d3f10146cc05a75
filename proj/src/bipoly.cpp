#include "regal/bipoly.hpp"

#include <algorithm>
#include <sstream>

#include "regal/errors.hpp"
#include "regal/qfactor.hpp"

namespace regal {

namespace {
const QPoly kZeroPoly;
}

void BiPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly BiPoly::from_qpoly_in_X(const QPoly& p) {
  std::vector<QPoly> c;
  for (int i = 0; i <= p.degree(); ++i) c.push_back(QPoly::constant(p.coeff(i)));
  return BiPoly(std::move(c));
}

BiPoly BiPoly::from_qpoly_in_T(const QPoly& p) { return BiPoly({p}); }

BiPoly BiPoly::X() { return BiPoly({QPoly(), QPoly::constant(1)}); }

BiPoly BiPoly::T() { return BiPoly({QPoly::variable()}); }

int BiPoly::degree_T() const {
  int d = -1;
  for (const auto& c : c_) d = std::max(d, c.degree());
  return d;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) d = std::max(d, static_cast<int>(i) + c_[i].degree());
  return d;
}

const QPoly& BiPoly::coeff_X(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZeroPoly;
  return c_[static_cast<std::size_t>(i)];
}

QPoly BiPoly::lc_X() const { return c_.empty() ? QPoly() : c_.back(); }

BiPoly BiPoly::operator+(const BiPoly& o) const {
  std::vector<QPoly> c(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c[i] + c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] = c[i] + o.c_[i];
  return BiPoly(std::move(c));
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
  std::vector<QPoly> c(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c[i] + c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] = c[i] - o.c_[i];
  return BiPoly(std::move(c));
}

BiPoly BiPoly::operator-() const {
  std::vector<QPoly> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return BiPoly(std::move(c));
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  if (c_.empty() || o.c_.empty()) return BiPoly();
  std::vector<QPoly> c(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      c[i + j] = c[i + j] + c_[i] * o.c_[j];
  return BiPoly(std::move(c));
}

BiPoly BiPoly::operator*(const Rat& a) const {
  std::vector<QPoly> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * a;
  return BiPoly(std::move(c));
}

QPoly BiPoly::eval_T(const Rat& t) const {
  std::vector<Rat> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i].eval(t);
  return QPoly(std::move(c));
}

QPoly BiPoly::eval_X(const Rat& x) const {
  QPoly acc;
  Rat pw = 1;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    acc = acc + c_[i] * pw;
    pw *= x;
  }
  return acc;
}

BiPoly BiPoly::derivative_X() const {
  if (c_.size() <= 1) return BiPoly();
  std::vector<QPoly> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    c[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return BiPoly(std::move(c));
}

QPoly BiPoly::content_T() const {
  QPoly g;
  for (const auto& c : c_) g = QPoly::gcd(g, c);
  return g;
}

BiPoly BiPoly::primitive_T() const {
  if (c_.empty()) return BiPoly();
  QPoly g = content_T();
  std::vector<QPoly> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = QPoly::exact_div(c_[i], g);
  BiPoly p(std::move(c));
  // strip the remaining rational content; keep the X-leading T-leading
  // coefficient positive
  Rat rc = 0;
  for (const auto& cc : p.c_) {
    Rat ci = cc.content();
    if (rc == 0) rc = ci < 0 ? Rat(-ci) : ci;
    else {
      // gcd of rationals
      Int n1 = rc.get_num(), d1 = rc.get_den();
      Int n2 = ci.get_num(), d2 = ci.get_den();
      Int ng, dl;
      mpz_gcd(ng.get_mpz_t(), n1.get_mpz_t(), n2.get_mpz_t());
      mpz_lcm(dl.get_mpz_t(), d1.get_mpz_t(), d2.get_mpz_t());
      rc = Rat(ng, dl);
      rc.canonicalize();
    }
  }
  if (rc != 0) {
    if (p.lc_X().lc() < 0) rc = -rc;
    for (auto& cc : p.c_) cc = cc * (Rat(1) / rc);
  }
  return p;
}

std::string BiPoly::str(const std::string& tvar, const std::string& xvar) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree_X(); i >= 0; --i) {
    const QPoly& c = coeff_X(i);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << (c.is_constant() ? c.str(tvar) : "(" + c.str(tvar) + ")");
    } else {
      if (c.is_one()) {
        os << xvar;
      } else if (c.is_constant()) {
        os << "(" << c.str(tvar) << ")*" << xvar;
      } else {
        os << "(" << c.str(tvar) << ")*" << xvar;
      }
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Resultants by evaluation / interpolation.
// ---------------------------------------------------------------------------

QPoly lagrange_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
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

QPoly bipoly_resultant_X(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero() || g.is_zero()) return QPoly();
  if (f.degree_X() == 0 || g.degree_X() == 0) {
    // res(f, g) with deg_X(f) = 0: f(T)^{deg_X g}
    const BiPoly& cst = f.degree_X() == 0 ? f : g;
    const BiPoly& oth = f.degree_X() == 0 ? g : f;
    QPoly base = cst.coeff_X(0);
    QPoly out = QPoly::constant(1);
    for (int i = 0; i < oth.degree_X(); ++i) out = out * base;
    return out;
  }
  int bound = f.degree_T() * g.degree_X() + g.degree_T() * f.degree_X();
  std::vector<Rat> xs, ys;
  std::size_t idx = 0;
  while (static_cast<int>(xs.size()) <= bound) {
    Rat t = Rat(canonical_int(idx++));
    if (f.lc_X().eval(t) == 0 || g.lc_X().eval(t) == 0) continue;
    xs.push_back(t);
    ys.push_back(QPoly::resultant(f.eval_T(t), g.eval_T(t)));
  }
  return lagrange_interpolate(xs, ys);
}

QPoly bipoly_discriminant_X(const BiPoly& f) {
  int d = f.degree_X();
  if (d < 2) fail("DegreeTooLow", "discriminant needs X-degree >= 2");
  QPoly res = bipoly_resultant_X(f, f.derivative_X());
  QPoly quot = QPoly::exact_div(res, f.lc_X());
  long sign_exp = (static_cast<long>(d) * (d - 1) / 2) % 2;
  return sign_exp == 0 ? quot : -quot;
}

// ---------------------------------------------------------------------------
// Polynomials over Q(T).
// ---------------------------------------------------------------------------

int ftpoly_deg(const FTPoly& f) {
  int d = static_cast<int>(f.size()) - 1;
  while (d >= 0 && f[static_cast<std::size_t>(d)].is_zero()) --d;
  return d;
}

static void fttrim(FTPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

FTPoly bipoly_to_ftpoly(const BiPoly& f) {
  FTPoly r;
  for (int i = 0; i <= f.degree_X(); ++i) r.emplace_back(f.coeff_X(i));
  fttrim(r);
  return r;
}

BiPoly ftpoly_clear_denominators(const FTPoly& f) {
  QPoly lcm = QPoly::constant(1);
  for (const auto& c : f) {
    QPoly g = QPoly::gcd(lcm, c.den());
    lcm = QPoly::exact_div(lcm * c.den(), g);
  }
  std::vector<QPoly> coeffs;
  for (const auto& c : f)
    coeffs.push_back(c.num() * QPoly::exact_div(lcm, c.den()));
  return BiPoly(std::move(coeffs)).primitive_T();
}

FTPoly ftpoly_mul(const FTPoly& a, const FTPoly& b) {
  if (a.empty() || b.empty()) return {};
  FTPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  fttrim(r);
  return r;
}

FTPoly ftpoly_sub(const FTPoly& a, const FTPoly& b) {
  FTPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
  fttrim(r);
  return r;
}

std::pair<FTPoly, FTPoly> ftpoly_divmod(const FTPoly& a, const FTPoly& b) {
  int db = ftpoly_deg(b);
  if (db < 0) fail("DivisionByZero", "division by zero over Q(T)");
  FTPoly r = a;
  fttrim(r);
  FTPoly q(a.size());
  RatFunc inv = b[static_cast<std::size_t>(db)].inv();
  while (ftpoly_deg(r) >= db) {
    int k = ftpoly_deg(r) - db;
    RatFunc f = r[static_cast<std::size_t>(ftpoly_deg(r))] * inv;
    q[static_cast<std::size_t>(k)] = f;
    for (int i = 0; i <= db; ++i) {
      std::size_t idx = static_cast<std::size_t>(i + k);
      r[idx] = r[idx] - f * b[static_cast<std::size_t>(i)];
    }
    fttrim(r);
  }
  fttrim(q);
  return {q, r};
}

FTPoly ftpoly_gcd(const FTPoly& a, const FTPoly& b) {
  FTPoly f = a, g = b;
  fttrim(f);
  fttrim(g);
  while (!g.empty()) {
    FTPoly r = ftpoly_divmod(f, g).second;
    f = std::move(g);
    g = std::move(r);
  }
  if (!f.empty()) {
    RatFunc inv = f[static_cast<std::size_t>(ftpoly_deg(f))].inv();
    for (auto& c : f) c = c * inv;
  }
  return f;
}

FTPoly ftpoly_add(const FTPoly& a, const FTPoly& b) {
  FTPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
  fttrim(r);
  return r;
}

FTPoly ftpoly_mod(const FTPoly& a, const FTPoly& f) {
  return ftpoly_divmod(a, f).second;
}

FTPoly ftpoly_mulmod(const FTPoly& a, const FTPoly& b, const FTPoly& f) {
  return ftpoly_mod(ftpoly_mul(a, b), f);
}

FTPoly ftpoly_invmod(const FTPoly& a, const FTPoly& f) {
  FTPoly r0 = f, r1 = a, s0, s1 = {RatFunc(Rat(1))};
  fttrim(r0);
  fttrim(r1);
  while (!r1.empty()) {
    auto [q, r] = ftpoly_divmod(r0, r1);
    FTPoly s2 = ftpoly_sub(s0, ftpoly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (ftpoly_deg(r0) != 0)
    fail("NotInvertible", "element shares a factor with the modulus");
  RatFunc c = r0[0];
  for (auto& x : s0) x = x / c;
  fttrim(s0);
  return ftpoly_mod(s0, f);
}

FTPoly ftpoly_compose_mod(const FTPoly& p, const FTPoly& r, const FTPoly& f) {
  FTPoly acc;
  for (int i = ftpoly_deg(p); i >= 0; --i) {
    acc = ftpoly_mulmod(acc, r, f);
    acc = ftpoly_add(acc, {p[static_cast<std::size_t>(i)]});
  }
  fttrim(acc);
  return acc;
}

BiPoly bipoly_gcd_X(const BiPoly& a, const BiPoly& b) {
  FTPoly g = ftpoly_gcd(bipoly_to_ftpoly(a), bipoly_to_ftpoly(b));
  if (g.empty()) return BiPoly();
  return ftpoly_clear_denominators(g);
}

// ---------------------------------------------------------------------------
// Bivariate factorization: (T - t0)-adic Hensel lifting with recombination.
// ---------------------------------------------------------------------------

namespace {

// Arithmetic in (Q[u]/(u^K))[X]; elements are BiPoly with T read as u.
QPoly trunc_poly(const QPoly& p, int K) {
  std::vector<Rat> c;
  for (int i = 0; i < K && i <= p.degree(); ++i) c.push_back(p.coeff(i));
  return QPoly(std::move(c));
}

BiPoly trunc_bi(const BiPoly& p, int K) {
  std::vector<QPoly> c;
  for (int i = 0; i <= p.degree_X(); ++i) c.push_back(trunc_poly(p.coeff_X(i), K));
  return BiPoly(std::move(c));
}

BiPoly tmul(const BiPoly& a, const BiPoly& b, int K) { return trunc_bi(a * b, K); }

// divisor monic in X
std::pair<BiPoly, BiPoly> tdivmod(const BiPoly& a, const BiPoly& b, int K) {
  BiPoly r = trunc_bi(a, K);
  std::vector<QPoly> q(static_cast<std::size_t>(std::max(0, a.degree_X() + 1)));
  int db = b.degree_X();
  while (r.degree_X() >= db) {
    int k = r.degree_X() - db;
    QPoly f = r.lc_X();
    q[static_cast<std::size_t>(k)] = f;
    BiPoly shift_b = BiPoly([&] {
      std::vector<QPoly> c(static_cast<std::size_t>(k));
      for (int i = 0; i <= db; ++i) c.push_back(b.coeff_X(i));
      return c;
    }());
    r = trunc_bi(r - shift_b * BiPoly::from_qpoly_in_T(f), K);
  }
  return {BiPoly(std::move(q)), r};
}

struct BiLiftPair {
  BiPoly g, h, s, t;
};

// One quadratic Hensel step u^K0 -> u^K1 for the monic bivariate case.
void bi_hensel_step(const BiPoly& f, BiLiftPair& lp, int K1) {
  BiPoly e = trunc_bi(f - lp.g * lp.h, K1);
  auto [q, r] = tdivmod(tmul(lp.s, e, K1), lp.h, K1);
  BiPoly g1 = trunc_bi(lp.g + tmul(lp.t, e, K1) + tmul(q, lp.g, K1), K1);
  BiPoly h1 = trunc_bi(lp.h + r, K1);
  BiPoly one({QPoly::constant(1)});
  BiPoly b = trunc_bi(tmul(lp.s, g1, K1) + tmul(lp.t, h1, K1) - one, K1);
  auto [c, d] = tdivmod(tmul(lp.s, b, K1), h1, K1);
  BiPoly s1 = trunc_bi(lp.s - d, K1);
  BiPoly t1 = trunc_bi(lp.t - tmul(lp.t, b, K1) - tmul(c, g1, K1), K1);
  lp = {std::move(g1), std::move(h1), std::move(s1), std::move(t1)};
}

BiPoly qpoly_X_to_bi(const QPoly& p) { return BiPoly::from_qpoly_in_X(p); }

void bi_hensel_tree(const BiPoly& f, const std::vector<QPoly>& factors,
                    std::size_t lo, std::size_t hi, int K,
                    std::vector<BiPoly>& lifted) {
  if (hi - lo == 1) {
    lifted[lo] = trunc_bi(f, K);
    return;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  QPoly g0 = QPoly::constant(1), h0 = QPoly::constant(1);
  for (std::size_t i = lo; i < mid; ++i) g0 = g0 * factors[i];
  for (std::size_t i = mid; i < hi; ++i) h0 = h0 * factors[i];
  QPoly s0, t0;
  if (QPoly::xgcd(g0, h0, s0, t0).degree() != 0)
    fail("InternalError", "specialized factors not coprime");
  BiLiftPair lp{qpoly_X_to_bi(g0), qpoly_X_to_bi(h0), qpoly_X_to_bi(s0),
                qpoly_X_to_bi(t0)};
  int cur = 1;
  while (cur < K) {
    cur = std::min(2 * cur, K);
    bi_hensel_step(f, lp, cur);
  }
  bi_hensel_tree(lp.g, factors, lo, mid, K, lifted);
  bi_hensel_tree(lp.h, factors, mid, hi, K, lifted);
}

// substitute T -> T + t0 (shift) in every X-coefficient
BiPoly shift_T(const BiPoly& f, const Rat& t0) {
  QPoly sub = QPoly::variable() + QPoly::constant(t0);
  std::vector<QPoly> c;
  for (int i = 0; i <= f.degree_X(); ++i) c.push_back(f.coeff_X(i).compose(sub));
  return BiPoly(std::move(c));
}

// f primitive in T, squarefree over Q(T), monic factors returned primitive.
std::vector<BiPoly> factor_bipoly_squarefree(const BiPoly& f) {
  int n = f.degree_X();
  if (n == 1) return {f};

  // Monicize over Q(T): F(T,X) = l^(n-1) f(T, X/l), l = lc_X(f).
  QPoly l = f.lc_X();
  std::vector<QPoly> mc(static_cast<std::size_t>(n) + 1);
  QPoly pw = QPoly::constant(1);
  for (int i = n; i >= 0; --i) {
    mc[static_cast<std::size_t>(i)] = f.coeff_X(i) * pw;
    if (i > 0) pw = pw * l;
  }
  BiPoly F(std::move(mc));

  // Good specialization point: full degree (automatic, monic) and squarefree.
  std::size_t idx = 0;
  Rat t0;
  QPoly f0;
  for (;; ++idx) {
    if (idx > 200) fail("Inconclusive", "no squarefree specialization found");
    t0 = Rat(canonical_int(idx));
    f0 = F.eval_T(t0);
    if (is_squarefree_over_Q(f0)) break;
  }
  auto base = factor_over_Q(f0);
  if (base.factors.size() == 1) return {f};  // irreducible already

  std::vector<QPoly> modular;
  for (const auto& [g, m] : base.factors) modular.push_back(g);

  // Lift in u = T - t0 to precision K > deg_T(F) (monic factors of a monic
  // polynomial over Q[T] have coefficient degree at most deg_T(F)).
  int K = F.degree_T() + 1;
  BiPoly Fu = shift_T(F, t0);  // now factor around u = 0
  std::vector<BiPoly> lifted(modular.size());
  bi_hensel_tree(trunc_bi(Fu, K), modular, 0, modular.size(), K, lifted);

  // Recombination.
  std::vector<BiPoly> found;
  FTPoly current = bipoly_to_ftpoly(F);
  std::vector<std::size_t> avail(lifted.size());
  for (std::size_t i = 0; i < avail.size(); ++i) avail[i] = i;
  bool progress = true;
  while (progress) {
    progress = false;
    std::size_t r = avail.size();
    if (r <= 1) break;
    for (std::size_t size = 1; size <= r / 2 && !progress; ++size) {
      std::vector<std::size_t> comb(size);
      for (std::size_t i = 0; i < size; ++i) comb[i] = i;
      while (true) {
        BiPoly prod({QPoly::constant(1)});
        for (std::size_t i : comb) prod = tmul(prod, lifted[avail[i]], K);
        BiPoly cand = shift_T(prod, -t0);  // back from u to T
        auto [q, rem] = ftpoly_divmod(current, bipoly_to_ftpoly(cand));
        if (rem.empty()) {
          found.push_back(cand);
          current = q;
          std::vector<std::size_t> keep;
          for (std::size_t i = 0; i < avail.size(); ++i)
            if (std::find(comb.begin(), comb.end(), i) == comb.end())
              keep.push_back(avail[i]);
          avail = std::move(keep);
          progress = true;
          break;
        }
        std::size_t i = size;
        bool advanced = false;
        while (i-- > 0) {
          if (comb[i] != i + r - size) {
            ++comb[i];
            for (std::size_t j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
            advanced = true;
            break;
          }
        }
        if (!advanced) break;
      }
    }
  }
  if (ftpoly_deg(current) > 0) found.push_back(ftpoly_clear_denominators(current));

  // Undo monicization: factor of f is primitive part of h(T, l*X).
  std::vector<BiPoly> out;
  for (const auto& h : found) {
    std::vector<QPoly> c;
    QPoly lp = QPoly::constant(1);
    for (int i = 0; i <= h.degree_X(); ++i) {
      c.push_back(h.coeff_X(i) * lp);
      lp = lp * l;
    }
    out.push_back(BiPoly(std::move(c)).primitive_T());
  }
  return out;
}

}  // namespace

BiFactorList factor_bipoly(const BiPoly& f_in) {
  if (f_in.is_zero()) fail("ZeroPolynomial", "cannot factor the zero polynomial");
  BiFactorList out;

  QPoly content = f_in.content_T();
  BiPoly f = f_in.primitive_T();
  // unit * content-part * primitive-part == f_in; determine the rational unit
  // at the end by comparison of leading coefficients.
  if (content.degree() > 0) {
    auto cf = factor_over_Q(content);
    for (auto& [g, m] : cf.factors) out.content_factors.emplace_back(g, m);
  }

  if (f.degree_X() >= 1) {
    // squarefree decomposition over Q(T) (Yun)
    FTPoly F = bipoly_to_ftpoly(f);
    FTPoly Fp = bipoly_to_ftpoly(f.derivative_X());
    FTPoly a = ftpoly_gcd(F, Fp);
    FTPoly b = ftpoly_divmod(F, a).first;
    FTPoly c = ftpoly_divmod(Fp, a).first;
    auto deriv = [](const FTPoly& p) {
      FTPoly r;
      for (std::size_t i = 1; i < p.size(); ++i)
        r.push_back(p[i] * RatFunc(Rat(static_cast<long>(i))));
      return r;
    };
    FTPoly d = ftpoly_sub(c, deriv(b));
    int mult = 1;
    while (ftpoly_deg(b) > 0) {
      FTPoly g = ftpoly_gcd(b, d);
      if (ftpoly_deg(g) > 0) {
        BiPoly part = ftpoly_clear_denominators(g);
        for (const auto& irr : factor_bipoly_squarefree(part))
          out.factors.emplace_back(irr, mult);
      }
      b = ftpoly_divmod(b, g).first;
      c = ftpoly_divmod(d, g).first;
      d = ftpoly_sub(c, deriv(b));
      ++mult;
    }
  }

  // Determine the unit so that unit * prod(content) * prod(factors) == f_in.
  BiPoly prod({QPoly::constant(1)});
  for (const auto& [g, m] : out.content_factors)
    for (int i = 0; i < m; ++i) prod = prod * BiPoly::from_qpoly_in_T(g);
  for (const auto& [g, m] : out.factors)
    for (int i = 0; i < m; ++i) prod = prod * g;
  // f_in = unit * prod must hold with a rational unit
  QPoly num = f_in.lc_X();
  QPoly den = prod.lc_X();
  RatFunc u(num, den);
  if (!u.is_constant())
    fail("InternalError", "bivariate factorization unit is not rational");
  out.unit = u.num().coeff(0) / u.den().coeff(0);
  if (prod * out.unit != f_in)
    fail("InternalError", "bivariate factorization check failed");
  return out;
}

IrreducibilityWitness is_irreducible_over_QT(const BiPoly& f, int witness_budget) {
  if (f.degree_X() < 1) fail("DegreeTooLow", "need X-degree >= 1");
  BiPoly p = f.primitive_T();
  int n = p.degree_X();
  IrreducibilityWitness w;
  for (int i = 0; i < witness_budget; ++i) {
    Rat t = Rat(canonical_int(static_cast<std::size_t>(i)));
    QPoly ft = p.eval_T(t);
    if (ft.degree() != n) continue;
    if (is_irreducible_over_Q(ft)) {
      w.irreducible = true;
      w.witness_t = t;
      return w;
    }
  }
  if (p.total_degree() <= kBivariateFactorCap) {
    auto fl = factor_bipoly(p);
    if (fl.content_factors.empty() && fl.factors.size() == 1 &&
        fl.factors[0].second == 1) {
      w.irreducible = true;
      w.via_full_factorization = true;
      return w;
    }
    w.irreducible = false;
    w.split = std::move(fl);
    return w;
  }
  fail("Inconclusive", "no witness found and degree exceeds the bivariate cap");
}

}  // namespace regal
