#ifndef REGAL_NUMFIELD_HPP
#define REGAL_NUMFIELD_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "regal/qfactor.hpp"
#include "regal/qpoly.hpp"

namespace regal {

inline constexpr int kFieldDegreeCap = 24;
inline constexpr int kFieldDegreeCapOverride = 36;

/// Number field Q(theta) in absolute presentation: Q[Y]/(minpoly), with
/// minpoly monic irreducible over Q. Degree 1 (minpoly = Y) presents Q itself.
struct AbsField {
  QPoly minpoly;      // monic irreducible
  std::string label;  // generator name, for printing only

  int degree() const { return minpoly.degree(); }
  bool is_rational() const { return degree() == 1; }

  static std::shared_ptr<const AbsField> rationals();
  /// Validates monic irreducibility.
  static std::shared_ptr<const AbsField> make(QPoly minpoly, std::string label);
};

/// Element of an AbsField: polynomial in the generator of degree < [K:Q].
class FElem {
 public:
  FElem() = default;
  FElem(std::shared_ptr<const AbsField> field, QPoly rep);
  static FElem from_rat(std::shared_ptr<const AbsField> field, const Rat& a);
  static FElem generator(std::shared_ptr<const AbsField> field);

  const std::shared_ptr<const AbsField>& field() const { return field_; }
  const QPoly& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  bool is_rational() const { return rep_.is_constant(); }
  Rat to_rat() const;  // Error("NotRational") unless constant

  FElem operator+(const FElem& o) const;
  FElem operator-(const FElem& o) const;
  FElem operator-() const;
  FElem operator*(const FElem& o) const;
  FElem operator*(const Rat& a) const;
  FElem operator/(const FElem& o) const;
  FElem inv() const;
  bool operator==(const FElem& o) const { return rep_ == o.rep_; }
  bool operator!=(const FElem& o) const { return rep_ != o.rep_; }

  std::string str() const;

 private:
  void check_same(const FElem& o) const;
  std::shared_ptr<const AbsField> field_;
  QPoly rep_;
};

/// Dense polynomial over a number field, low to high degree, trimmed.
using KPoly = std::vector<FElem>;

int kp_deg(const KPoly& f);
void kp_trim(KPoly& f);
KPoly kp_from_qpoly(const std::shared_ptr<const AbsField>& k, const QPoly& f);
KPoly kp_add(const KPoly& a, const KPoly& b);
KPoly kp_sub(const KPoly& a, const KPoly& b);
KPoly kp_mul(const KPoly& a, const KPoly& b);
KPoly kp_scale(const KPoly& a, const FElem& c);
std::pair<KPoly, KPoly> kp_divmod(const KPoly& a, const KPoly& b);
KPoly kp_gcd(const KPoly& a, const KPoly& b);  // monic
KPoly kp_derivative(const KPoly& f);
KPoly kp_monic(const KPoly& f);
FElem kp_eval(const KPoly& f, const FElem& x);
KPoly kp_compose(const KPoly& f, const KPoly& inner);
std::string kp_str(const KPoly& f, const std::string& var = "X");
bool kp_order_less(const KPoly& a, const KPoly& b);

struct KFactorList {
  FElem unit;
  std::vector<std::pair<KPoly, int>> factors;  // monic irreducible over K
};

/// Trager's algorithm: factor f over the number field K via squarefree norms.
/// The norm degree deg(f)·[K:Q] must stay within kFactorDegreeCap.
KFactorList factor_over_number_field(const std::shared_ptr<const AbsField>& k,
                                     const KPoly& f);

bool is_irreducible_over_field(const std::shared_ptr<const AbsField>& k, const KPoly& f);

/// Roots of f lying in K (from the linear factors), sorted by representative.
std::vector<FElem> roots_in_field(const std::shared_ptr<const AbsField>& k, const KPoly& f);

struct AdjoinResult {
  std::shared_ptr<const AbsField> field;  // L = Q(gamma), gamma = x + c*theta
  QPoly old_gen_image;  // theta as an element of L
  QPoly root_image;     // x (the adjoined root) as an element of L
  Rat mix;              // the chosen c
};

/// L = K(x) for x a root of the monic irreducible f over K, returned in
/// absolute presentation with images of the old generator and of x.
AdjoinResult adjoin_root(const std::shared_ptr<const AbsField>& k, const KPoly& f,
                         const std::string& label, int degree_cap = kFieldDegreeCap);

/// Carry an element of K into the extension produced by adjoin_root.
FElem embed_elem(const FElem& a, const AdjoinResult& ext);

/// All field embeddings K -> L, each given by the image of K's generator.
std::vector<FElem> embeddings(const std::shared_ptr<const AbsField>& k,
                              const std::shared_ptr<const AbsField>& l);

}  // namespace regal

#endif
