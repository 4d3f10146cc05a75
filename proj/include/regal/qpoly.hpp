#ifndef REGAL_QPOLY_HPP
#define REGAL_QPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "regal/rat.hpp"

namespace regal {

/// Dense univariate polynomial with rational coefficients, stored low to
/// high degree with no trailing zeros. The zero polynomial has degree -1.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static QPoly zero() { return QPoly(); }
  static QPoly constant(const Rat& a);
  static QPoly variable();  // X
  static QPoly monomial(int deg, const Rat& a);
  static QPoly from_int_coeffs(const std::vector<long>& coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  const Rat& coeff(int i) const;  // zero beyond degree
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat lc() const;  // leading coefficient; 0 for the zero polynomial

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator-() const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator*(const Rat& a) const;
  bool operator==(const QPoly& o) const { return c_ == o.c_; }
  bool operator!=(const QPoly& o) const { return c_ != o.c_; }

  QPoly shifted(int k) const;  // multiply by X^k
  QPoly derivative() const;
  Rat eval(const Rat& x) const;
  QPoly compose(const QPoly& inner) const;  // this(inner(X))
  QPoly monic() const;

  /// Quotient and remainder over the field of rationals.
  static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
  static QPoly gcd(const QPoly& a, const QPoly& b);  // monic, gcd(0,0)=0
  /// g = s*a + t*b with g monic (or zero); returns g.
  static QPoly xgcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t);
  static QPoly exact_div(const QPoly& a, const QPoly& b);

  static Rat resultant(const QPoly& f, const QPoly& g);
  Rat discriminant() const;  // (-1)^{d(d-1)/2} res(f,f') / lc, deg >= 2

  /// gcd of numerators over lcm of denominators; 0 for the zero polynomial.
  Rat content() const;
  /// Integer-coefficient primitive part with positive leading coefficient.
  QPoly primitive() const;

  /// Deterministic ordering: degree first, then coefficients compared from
  /// the leading term down.
  static bool order_less(const QPoly& a, const QPoly& b);

  std::string str(const std::string& var = "X") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

inline QPoly operator*(const Rat& a, const QPoly& p) { return p * a; }

}  // namespace regal

#endif
