#ifndef REGAL_BIPOLY_HPP
#define REGAL_BIPOLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regal/qpoly.hpp"
#include "regal/ratfunc.hpp"

namespace regal {

/// Element of Q[T][X]: the coefficient of X^i is a polynomial in the
/// parameter variable T (or Z, depending on context).
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<QPoly> x_coeffs) : c_(std::move(x_coeffs)) { trim(); }

  static BiPoly from_qpoly_in_X(const QPoly& p);  // constant in T
  static BiPoly from_qpoly_in_T(const QPoly& p);  // degree 0 in X
  static BiPoly X();
  static BiPoly T();

  int degree_X() const { return static_cast<int>(c_.size()) - 1; }
  int degree_T() const;
  int total_degree() const;
  bool is_zero() const { return c_.empty(); }
  const QPoly& coeff_X(int i) const;
  const std::vector<QPoly>& coeffs_X() const { return c_; }
  QPoly lc_X() const;

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator-() const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly operator*(const Rat& a) const;
  bool operator==(const BiPoly& o) const { return c_ == o.c_; }
  bool operator!=(const BiPoly& o) const { return !(*this == o); }

  QPoly eval_T(const Rat& t) const;  // polynomial in X
  QPoly eval_X(const Rat& x) const;  // polynomial in T
  BiPoly derivative_X() const;

  /// gcd of the X-coefficients (monic polynomial in T).
  QPoly content_T() const;
  BiPoly primitive_T() const;

  std::string str(const std::string& tvar = "T", const std::string& xvar = "X") const;

 private:
  void trim();
  std::vector<QPoly> c_;
};

/// Resultant with respect to X of two elements of Q[T][X]; computed by
/// evaluation at enough T-points and interpolation.
QPoly bipoly_resultant_X(const BiPoly& f, const BiPoly& g);

/// disc_X(f) = (-1)^{d(d-1)/2} res_X(f, df/dX) / lc_X(f) as element of Q(T);
/// the division is exact in Q[T].
QPoly bipoly_discriminant_X(const BiPoly& f);

/// Polynomials in X over Q(T); used for exact division and gcd over the
/// function field.
using FTPoly = std::vector<RatFunc>;  // low to high in X, trimmed by callers

FTPoly bipoly_to_ftpoly(const BiPoly& f);
BiPoly ftpoly_clear_denominators(const FTPoly& f);  // primitive in Q[T][X]
int ftpoly_deg(const FTPoly& f);
std::pair<FTPoly, FTPoly> ftpoly_divmod(const FTPoly& a, const FTPoly& b);
FTPoly ftpoly_gcd(const FTPoly& a, const FTPoly& b);  // monic over Q(T)
FTPoly ftpoly_mul(const FTPoly& a, const FTPoly& b);
FTPoly ftpoly_sub(const FTPoly& a, const FTPoly& b);
FTPoly ftpoly_add(const FTPoly& a, const FTPoly& b);

/// Arithmetic in Q(T)[X]/(f), f monic-equivalent of positive degree.
FTPoly ftpoly_mod(const FTPoly& a, const FTPoly& f);
FTPoly ftpoly_mulmod(const FTPoly& a, const FTPoly& b, const FTPoly& f);
/// Inverse of a mod f; Error("NotInvertible") when gcd(a, f) != 1.
FTPoly ftpoly_invmod(const FTPoly& a, const FTPoly& f);
/// p(r) mod f by Horner.
FTPoly ftpoly_compose_mod(const FTPoly& p, const FTPoly& r, const FTPoly& f);

/// Lagrange interpolation through (xs[i], ys[i]) with distinct xs.
QPoly lagrange_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

/// gcd over Q(T) of two bivariate polynomials, returned primitive in Q[T][X].
BiPoly bipoly_gcd_X(const BiPoly& a, const BiPoly& b);

struct BiFactorList {
  Rat unit = 1;
  std::vector<std::pair<QPoly, int>> content_factors;  // irreducible in Q[T]
  std::vector<std::pair<BiPoly, int>> factors;  // primitive, irreducible in Q[T][X]
};

/// Complete factorization in Q[T][X] (content in T split off and factored
/// over Q). Intended for small inputs; cost grows quickly with degree.
BiFactorList factor_bipoly(const BiPoly& f);

struct IrreducibilityWitness {
  bool irreducible = false;
  std::optional<Rat> witness_t;          // specialization certifying TRUE
  std::optional<BiFactorList> split;     // explicit factorization for FALSE
  bool via_full_factorization = false;   // TRUE found by bivariate factoring
};

inline constexpr int kBivariateFactorCap = 12;  // total degree

/// Irreducibility over Q(T) for primitive f: first searches for an integer
/// specialization witness (sound by Gauss's lemma), then falls back to full
/// bivariate factorization up to total degree kBivariateFactorCap.
/// Throws Error("Inconclusive") if both fail within budget.
IrreducibilityWitness is_irreducible_over_QT(const BiPoly& f, int witness_budget = 40);

}  // namespace regal

#endif
