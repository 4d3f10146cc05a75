#include "regal/qfactor.hpp"

#include <algorithm>
#include <bitset>
#include <cstddef>

#include "regal/errors.hpp"

namespace regal {

namespace {

// ---------------------------------------------------------------------------
// Integer polynomials modulo m, coefficients stored in [0, m).
// ---------------------------------------------------------------------------

using ZPoly = std::vector<Int>;  // low to high, trimmed

void ztrim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int zdeg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

Int imod(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

ZPoly zmod(const ZPoly& f, const Int& m) {
  ZPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = imod(f[i], m);
  ztrim(r);
  return r;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b, const Int& m) {
  ZPoly r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = imod(r[i] + b[i], m);
  ztrim(r);
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b, const Int& m) {
  ZPoly r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = imod(r[i] - b[i], m);
  ztrim(r);
  return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  for (auto& v : r) v = imod(v, m);
  ztrim(r);
  return r;
}

// Divisor must have a leading coefficient invertible mod m.
std::pair<ZPoly, ZPoly> zdivmod(const ZPoly& a, const ZPoly& b, const Int& m) {
  if (b.empty()) fail("DivisionByZero", "zero divisor mod m");
  Int inv;
  if (!mpz_invert(inv.get_mpz_t(), b.back().get_mpz_t(), m.get_mpz_t()))
    fail("InternalError", "leading coefficient not invertible mod m");
  ZPoly r = a;
  ztrim(r);
  ZPoly q(a.size(), Int(0));
  int db = zdeg(b);
  while (zdeg(r) >= db) {
    int k = zdeg(r) - db;
    Int f = imod(r.back() * inv, m);
    q[static_cast<std::size_t>(k)] = f;
    for (int i = 0; i <= db; ++i) {
      std::size_t idx = static_cast<std::size_t>(i + k);
      r[idx] = imod(r[idx] - f * b[static_cast<std::size_t>(i)], m);
    }
    ztrim(r);
  }
  ztrim(q);
  return {q, r};
}

ZPoly zmonic(const ZPoly& f, const Int& m) {
  if (f.empty()) return f;
  Int inv;
  mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), m.get_mpz_t());
  ZPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = imod(f[i] * inv, m);
  return r;
}

ZPoly zgcd(ZPoly a, ZPoly b, const Int& p) {
  while (!b.empty()) {
    ZPoly r = zdivmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : zmonic(a, p);
}

// Extended Euclid mod prime p: s*a + t*b = 1, requires gcd(a, b) = 1.
void zbezout(const ZPoly& a, const ZPoly& b, const Int& p, ZPoly& s, ZPoly& t) {
  ZPoly r0 = a, r1 = b;
  ZPoly s0 = {Int(1)}, s1 = {};
  ZPoly t0 = {}, t1 = {Int(1)};
  while (!r1.empty()) {
    auto [q, r] = zdivmod(r0, r1, p);
    ZPoly s2 = zsub(s0, zmul(q, s1, p), p);
    ZPoly t2 = zsub(t0, zmul(q, t1, p), p);
    r0 = std::move(r1); r1 = std::move(r);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (zdeg(r0) != 0) fail("InternalError", "bezout inputs not coprime mod p");
  Int inv;
  mpz_invert(inv.get_mpz_t(), r0[0].get_mpz_t(), p.get_mpz_t());
  s.assign(s0.begin(), s0.end());
  t.assign(t0.begin(), t0.end());
  for (auto& v : s) v = imod(v * inv, p);
  for (auto& v : t) v = imod(v * inv, p);
}

ZPoly zderiv(const ZPoly& f, const Int& m) {
  if (f.size() <= 1) return {};
  ZPoly r(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i)
    r[i - 1] = imod(f[i] * Int(static_cast<long>(i)), m);
  ztrim(r);
  return r;
}

ZPoly zpow_mod(const ZPoly& base, Int e, const ZPoly& f, const Int& p) {
  ZPoly result = {Int(1)};
  ZPoly b = zdivmod(base, f, p).second;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t()))
      result = zdivmod(zmul(result, b, p), f, p).second;
    b = zdivmod(zmul(b, b, p), f, p).second;
    e >>= 1;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Factorization mod an odd prime: distinct-degree + deterministic
// Cantor-Zassenhaus equal-degree splitting.
// ---------------------------------------------------------------------------

// Enumerate non-constant polynomials of degree < max_deg mod p in a fixed
// order (seed interpreted in base p).
ZPoly edf_candidate(unsigned long seed, int max_deg, const Int& p) {
  ZPoly t;
  Int s(seed);
  int i = 0;
  while (s > 0 && i < max_deg) {
    Int digit = imod(s, p);
    t.push_back(digit);
    s /= p;
    ++i;
  }
  ztrim(t);
  return t;
}

void equal_degree_split(const ZPoly& g, int d, const Int& p,
                        std::vector<ZPoly>& out) {
  if (zdeg(g) == d) {
    out.push_back(g);
    return;
  }
  Int e = 1;
  mpz_pow_ui(e.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  for (unsigned long seed = static_cast<unsigned long>(p.get_ui());; ++seed) {
    ZPoly t = edf_candidate(seed, 2 * d, p);
    if (zdeg(t) < 1) continue;
    ZPoly u = zpow_mod(t, e, g, p);
    u = zsub(u, {Int(1)}, p);
    ZPoly w = zgcd(u, g, p);
    if (zdeg(w) > 0 && zdeg(w) < zdeg(g)) {
      equal_degree_split(w, d, p, out);
      equal_degree_split(zdivmod(g, w, p).first, d, p, out);
      return;
    }
  }
}

// f monic squarefree mod p; returns monic irreducible factors sorted by
// (degree, coefficient sequence).
std::vector<ZPoly> factor_mod_p(ZPoly f, const Int& p) {
  std::vector<ZPoly> out;
  ZPoly x = {Int(0), Int(1)};
  ZPoly h = x;
  int d = 0;
  while (zdeg(f) >= 2 * (d + 1)) {
    ++d;
    h = zpow_mod(h, p, f, p);
    ZPoly g = zgcd(zsub(h, x, p), f, p);
    if (zdeg(g) > 0) {
      equal_degree_split(g, d, p, out);
      f = zdivmod(f, g, p).first;
      h = zdivmod(h, f, p).second;
    }
  }
  if (zdeg(f) > 0) out.push_back(f);
  std::sort(out.begin(), out.end(), [](const ZPoly& a, const ZPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Hensel lifting (monic factorizations only).
// ---------------------------------------------------------------------------

struct LiftPair {
  ZPoly g, h, s, t;
};

// One quadratic Hensel step: modulus m -> m^2 (von zur Gathen & Gerhard,
// Algorithm 15.10, monic case).
void hensel_step(const ZPoly& f, LiftPair& lp, const Int& m) {
  Int m2 = m * m;
  ZPoly e = zsub(zmod(f, m2), zmul(lp.g, lp.h, m2), m2);
  auto [q, r] = zdivmod(zmul(lp.s, e, m2), lp.h, m2);
  ZPoly g1 = zadd(lp.g, zadd(zmul(lp.t, e, m2), zmul(q, lp.g, m2), m2), m2);
  ZPoly h1 = zadd(lp.h, r, m2);
  ZPoly b = zsub(zadd(zmul(lp.s, g1, m2), zmul(lp.t, h1, m2), m2), {Int(1)}, m2);
  auto [c, dd] = zdivmod(zmul(lp.s, b, m2), h1, m2);
  ZPoly s1 = zsub(lp.s, dd, m2);
  ZPoly t1 = zsub(zsub(lp.t, zmul(lp.t, b, m2), m2), zmul(c, g1, m2), m2);
  lp = {std::move(g1), std::move(h1), std::move(s1), std::move(t1)};
}

// Lift the monic factorization f = prod(factors) from mod p to mod target,
// where target is p^(2^k). Recursive factor-tree.
void hensel_tree(const ZPoly& f, const std::vector<ZPoly>& factors,
                 std::size_t lo, std::size_t hi, const Int& p,
                 const Int& target, std::vector<ZPoly>& lifted) {
  if (hi - lo == 1) {
    lifted[lo] = zmod(f, target);
    return;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  ZPoly g = {Int(1)}, h = {Int(1)};
  for (std::size_t i = lo; i < mid; ++i) g = zmul(g, factors[i], p);
  for (std::size_t i = mid; i < hi; ++i) h = zmul(h, factors[i], p);
  LiftPair lp;
  lp.g = g;
  lp.h = h;
  zbezout(g, h, p, lp.s, lp.t);
  Int m = p;
  while (m < target) {
    hensel_step(f, lp, m);
    m = m * m;
  }
  hensel_tree(zmod(lp.g, target), factors, lo, mid, p, target, lifted);
  hensel_tree(zmod(lp.h, target), factors, mid, hi, p, target, lifted);
}

// ---------------------------------------------------------------------------
// Recombination.
// ---------------------------------------------------------------------------

Int sym(const Int& a, const Int& m) { return (2 * a > m) ? Int(a - m) : a; }

ZPoly sym_lift(const ZPoly& f, const Int& m) {
  ZPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = sym(f[i], m);
  return r;
}

// Exact division of monic integer polynomials; returns empty on failure.
bool zdivide_exact(const ZPoly& a, const ZPoly& b, ZPoly& q_out) {
  ZPoly r = a;
  ZPoly q(a.size(), Int(0));
  int db = zdeg(b);
  while (zdeg(r) >= db) {
    int k = zdeg(r) - db;
    Int f = r.back();  // b monic
    q[static_cast<std::size_t>(k)] = f;
    for (int i = 0; i <= db; ++i)
      r[static_cast<std::size_t>(i + k)] -= f * b[static_cast<std::size_t>(i)];
    ztrim(r);
  }
  if (!r.empty()) return false;
  ztrim(q);
  q_out = std::move(q);
  return true;
}

using DegSet = std::bitset<kFactorDegreeCap + 1>;

DegSet subset_degree_sums(const std::vector<int>& degs) {
  DegSet s;
  s.set(0);
  for (int d : degs) s |= s << d;
  return s;
}

// Factor a monic squarefree integer polynomial into monic irreducible
// integer factors.
std::vector<ZPoly> factor_monic_squarefree(const ZPoly& f_in) {
  int n = zdeg(f_in);
  if (n <= 1) return {f_in};

  // Prime selection: squarefree reduction required; prefer the prime with
  // the fewest modular factors.
  struct Cand {
    Int p;
    std::vector<ZPoly> factors;
  };
  std::vector<Cand> cands;
  DegSet feasible;
  feasible.set();
  Int p(2);
  int good = 0;
  while (good < 3) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    ZPoly fp = zmod(f_in, p);
    if (zdeg(fp) != n) continue;  // p | lc impossible (monic), keep guard
    if (zdeg(zgcd(fp, zderiv(fp, p), p)) != 0) continue;
    Cand c;
    c.p = p;
    c.factors = factor_mod_p(fp, p);
    std::vector<int> degs;
    for (const auto& g : c.factors) degs.push_back(zdeg(g));
    feasible &= subset_degree_sums(degs);
    if (c.factors.size() == 1) return {f_in};  // irreducible mod p
    cands.push_back(std::move(c));
    ++good;
  }
  auto best = std::min_element(cands.begin(), cands.end(),
                               [](const Cand& a, const Cand& b) {
                                 if (a.factors.size() != b.factors.size())
                                   return a.factors.size() < b.factors.size();
                                 return a.p < b.p;
                               });

  // Coefficient bound for monic factors: 2^n * ||f||_2 (Mignotte-style).
  Int norm2sq = 0;
  for (const auto& c : f_in) norm2sq += c * c;
  Int norm2;
  mpz_sqrt(norm2.get_mpz_t(), norm2sq.get_mpz_t());
  norm2 += 1;
  Int bound = norm2;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(),
               static_cast<unsigned long>(n));
  Int need = 2 * bound + 1;
  Int target = best->p;
  while (target < need) target = target * target;

  std::vector<ZPoly> lifted(best->factors.size());
  hensel_tree(zmod(f_in, target), best->factors, 0, best->factors.size(),
              best->p, target, lifted);

  // Subset recombination in deterministic order.
  std::vector<ZPoly> result;
  ZPoly current = f_in;
  std::vector<std::size_t> avail(lifted.size());
  for (std::size_t i = 0; i < avail.size(); ++i) avail[i] = i;

  bool progress = true;
  while (progress) {
    progress = false;
    std::size_t r = avail.size();
    if (r == 0) break;
    if (r == 1) {
      result.push_back(current);
      avail.clear();
      break;
    }
    for (std::size_t size = 1; size <= r / 2 && !progress; ++size) {
      std::vector<std::size_t> idx(size);
      for (std::size_t i = 0; i < size; ++i) idx[i] = i;
      while (true) {
        int dsum = 0;
        for (std::size_t i : idx) dsum += zdeg(lifted[avail[i]]);
        if (dsum <= kFactorDegreeCap && feasible.test(static_cast<std::size_t>(dsum))) {
          ZPoly prod = {Int(1)};
          for (std::size_t i : idx)
            prod = zmul(prod, lifted[avail[i]], target);
          ZPoly cand = sym_lift(prod, target);
          ZPoly q;
          if (zdivide_exact(current, cand, q)) {
            result.push_back(cand);
            current = std::move(q);
            std::vector<std::size_t> keep;
            for (std::size_t i = 0; i < avail.size(); ++i)
              if (std::find(idx.begin(), idx.end(), i) == idx.end())
                keep.push_back(avail[i]);
            avail = std::move(keep);
            progress = true;
            break;
          }
        }
        // next combination
        std::size_t i = size;
        while (i-- > 0) {
          if (idx[i] != i + r - size) {
            ++idx[i];
            for (std::size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
            break;
          }
          if (i == 0) goto comb_done;
        }
        continue;
      comb_done:
        break;
      }
    }
    if (!progress && !avail.empty()) {
      // remaining product is irreducible
      result.push_back(current);
      avail.clear();
    }
  }
  if (zdeg(current) > 0 && result.empty()) result.push_back(current);
  return result;
}

ZPoly to_zpoly(const QPoly& f) {
  // caller guarantees integer coefficients
  ZPoly r(static_cast<std::size_t>(f.degree()) + 1);
  for (int i = 0; i <= f.degree(); ++i) r[static_cast<std::size_t>(i)] = f.coeff(i).get_num();
  return r;
}

QPoly from_zpoly(const ZPoly& f) {
  std::vector<Rat> c(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) c[i] = Rat(f[i]);
  return QPoly(std::move(c));
}

// Monic irreducible factors over Q of a squarefree monic rational polynomial.
std::vector<QPoly> factor_squarefree(const QPoly& f) {
  int n = f.degree();
  if (n == 1) return {f};
  // Clear denominators, then enforce a monic integer model via
  // g(X) = a^(n-1) f0(X/a) with f0 = primitive integer model, a = lc(f0).
  QPoly f0 = f.primitive();
  Int a = f0.lc().get_num();
  ZPoly fz = to_zpoly(f0);
  ZPoly g(fz.size());
  Int pw = 1;
  for (int i = n; i >= 0; --i) {
    g[static_cast<std::size_t>(i)] = fz[static_cast<std::size_t>(i)] * pw;
    if (i > 0) pw *= a;
  }
  auto zfactors = factor_monic_squarefree(g);
  std::vector<QPoly> out;
  for (const auto& zf : zfactors) {
    // undo the substitution: factor of f is monic(zf(a*X))
    QPoly q = from_zpoly(zf);
    QPoly sub = q.compose(QPoly::variable() * Rat(a));
    out.push_back(sub.monic());
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public interface.
// ---------------------------------------------------------------------------

QPoly QFactorList::product() const {
  QPoly p = QPoly::constant(unit);
  for (const auto& [f, m] : factors)
    for (int i = 0; i < m; ++i) p = p * f;
  return p;
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f_in) {
  if (f_in.is_zero()) fail("ZeroPolynomial", "squarefree decomposition of 0");
  std::vector<std::pair<QPoly, int>> out;
  QPoly f = f_in.monic();
  if (f.degree() == 0) return out;
  // Yun's algorithm
  QPoly fp = f.derivative();
  QPoly a = QPoly::gcd(f, fp);
  QPoly b = QPoly::exact_div(f, a);
  QPoly c = QPoly::exact_div(fp, a);
  QPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    QPoly g = QPoly::gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = QPoly::exact_div(b, g);
    c = QPoly::exact_div(d, g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

QFactorList factor_over_Q(const QPoly& f) {
  if (f.is_zero()) fail("ZeroPolynomial", "cannot factor the zero polynomial");
  if (f.degree() > kFactorDegreeCap)
    fail("DegreeCapExceeded", "factorization degree cap is " +
                                  std::to_string(kFactorDegreeCap));
  QFactorList out;
  out.unit = f.lc();
  if (f.degree() == 0) return out;
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    for (const auto& irr : factor_squarefree(part))
      out.factors.emplace_back(irr, mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return QPoly::order_less(a.first, b.first);
              return a.second < b.second;
            });
  if (out.product() != f) fail("InternalError", "factorization check failed");
  return out;
}

bool is_irreducible_over_Q(const QPoly& f) {
  if (f.degree() < 1) return false;
  auto fl = factor_over_Q(f);
  return fl.factors.size() == 1 && fl.factors[0].second == 1;
}

bool is_squarefree_over_Q(const QPoly& f) {
  if (f.degree() < 1) return !f.is_zero();
  return QPoly::gcd(f, f.derivative()).degree() == 0;
}

bool rat_is_square(const Rat& r) {
  if (r < 0) return false;
  return mpz_perfect_square_p(r.get_num().get_mpz_t()) &&
         mpz_perfect_square_p(r.get_den().get_mpz_t());
}

}  // namespace regal
