#include "regal/qpoly.hpp"

#include <sstream>

#include "regal/errors.hpp"

namespace regal {

namespace {
const Rat kZero = 0;
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::constant(const Rat& a) {
  QPoly p;
  if (a != 0) p.c_.push_back(a);
  return p;
}

QPoly QPoly::variable() {
  QPoly p;
  p.c_ = {Rat(0), Rat(1)};
  return p;
}

QPoly QPoly::monomial(int deg, const Rat& a) {
  QPoly p;
  if (a != 0) {
    p.c_.assign(static_cast<std::size_t>(deg) + 1, Rat(0));
    p.c_.back() = a;
  }
  return p;
}

QPoly QPoly::from_int_coeffs(const std::vector<long>& coeffs) {
  std::vector<Rat> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return QPoly(std::move(c));
}

const Rat& QPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<std::size_t>(i)];
}

Rat QPoly::lc() const { return c_.empty() ? Rat(0) : c_.back(); }

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return QPoly(std::move(c));
}

QPoly QPoly::operator-(const QPoly& o) const {
  std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
  return QPoly(std::move(c));
}

QPoly QPoly::operator-() const {
  std::vector<Rat> c(c_);
  for (auto& v : c) v = -v;
  return QPoly(std::move(c));
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (c_.empty() || o.c_.empty()) return QPoly();
  std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return QPoly(std::move(c));
}

QPoly QPoly::operator*(const Rat& a) const {
  std::vector<Rat> c(c_);
  for (auto& v : c) v *= a;
  return QPoly(std::move(c));
}

QPoly QPoly::shifted(int k) const {
  if (c_.empty()) return QPoly();
  std::vector<Rat> c(static_cast<std::size_t>(k), Rat(0));
  c.insert(c.end(), c_.begin(), c_.end());
  return QPoly(std::move(c));
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return QPoly();
  std::vector<Rat> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return QPoly(std::move(c));
}

Rat QPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly QPoly::compose(const QPoly& inner) const {
  QPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * inner + QPoly::constant(*it);
  return acc;
}

QPoly QPoly::monic() const {
  if (c_.empty()) return QPoly();
  return *this * (Rat(1) / lc());
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) fail("DivisionByZero", "polynomial division by zero");
  QPoly r = a;
  std::vector<Rat> q(a.c_.size(), Rat(0));
  const int db = b.degree();
  const Rat inv_lc = Rat(1) / b.lc();
  while (r.degree() >= db) {
    int k = r.degree() - db;
    Rat f = r.lc() * inv_lc;
    q[static_cast<std::size_t>(k)] = f;
    // r -= f * X^k * b
    for (int i = 0; i <= db; ++i)
      r.c_[static_cast<std::size_t>(i + k)] -= f * b.c_[static_cast<std::size_t>(i)];
    r.trim();
  }
  return {QPoly(std::move(q)), r};
}

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
  QPoly f = a, g = b;
  while (!g.is_zero()) {
    QPoly r = divmod(f, g).second;
    f = g;
    g = r;
  }
  return f.is_zero() ? f : f.monic();
}

QPoly QPoly::xgcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t) {
  QPoly r0 = a, r1 = b;
  QPoly s0 = QPoly::constant(1), s1;
  QPoly t0, t1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s2 = s0 - q * s1;
    QPoly t2 = t0 - q * t1;
    r0 = std::move(r1); r1 = std::move(r);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    s = QPoly();
    t = QPoly();
    return QPoly();
  }
  Rat inv = Rat(1) / r0.lc();
  s = s0 * inv;
  t = t0 * inv;
  return r0 * inv;
}

QPoly QPoly::exact_div(const QPoly& a, const QPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) fail("InexactDivision", "polynomial division left a remainder");
  return q;
}

Rat QPoly::resultant(const QPoly& f, const QPoly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  if (f.degree() == 0) {
    Rat r = f.lc();
    Rat out = 1;
    for (int i = 0; i < g.degree(); ++i) out *= r;
    return out;
  }
  if (g.degree() == 0) {
    Rat r = g.lc();
    Rat out = 1;
    for (int i = 0; i < f.degree(); ++i) out *= r;
    return out;
  }
  // res(f,g) = (-1)^{df*dg} lc(g)^{df-dr} res(g, f mod g)
  QPoly r = divmod(f, g).second;
  int df = f.degree(), dg = g.degree();
  if (r.is_zero()) return 0;
  int dr = r.degree();
  Rat pw = 1;
  for (int i = 0; i < df - dr; ++i) pw *= g.lc();
  Rat sub = resultant(g, r);
  Rat sign = ((static_cast<long>(df) * dg) % 2 == 0) ? 1 : -1;
  return sign * pw * sub;
}

Rat QPoly::discriminant() const {
  if (degree() < 2) fail("DegreeTooLow", "discriminant needs degree >= 2");
  Rat res = resultant(*this, derivative());
  long d = degree();
  Rat sign = ((d * (d - 1) / 2) % 2 == 0) ? 1 : -1;
  return sign * res / lc();
}

Rat QPoly::content() const {
  if (c_.empty()) return 0;
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& v : c_) {
    Int n = v.get_num(), d = v.get_den();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  Rat c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

QPoly QPoly::primitive() const {
  if (c_.empty()) return QPoly();
  Rat c = content();
  if (lc() < 0) c = -c;
  return *this * (Rat(1) / c);
}

bool QPoly::order_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  }
  return false;
}

std::string QPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& a = coeff(i);
    if (a == 0) continue;
    Rat mag = a < 0 ? Rat(-a) : a;
    if (first) {
      if (a < 0) os << "-";
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    bool unit = (mag == 1);
    if (i == 0) {
      os << rat_str(mag);
    } else {
      if (!unit) {
        bool frac = (mag.get_den() != 1);
        if (frac) os << "(" << rat_str(mag) << ")";
        else os << rat_str(mag);
        os << "*";
      }
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace regal
