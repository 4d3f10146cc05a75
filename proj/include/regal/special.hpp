#ifndef REGAL_SPECIAL_HPP
#define REGAL_SPECIAL_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "regal/bipoly.hpp"
#include "regal/numfield.hpp"
#include "regal/qfactor.hpp"
#include "regal/verdict.hpp"

namespace regal {

/// Rescale f so its X-leading coefficient becomes 1 while the roots stay
/// integral over Q[T]: with c = lc_X(f), substitute X -> X/c and multiply by
/// c^{n-1}. Identity on monic input.
BiPoly monic_integral_model(const BiPoly& f);

struct SpecializationReport {
  Rat t;
  QPoly specialized;          // P(t, X) of the monic-integral model
  bool full_degree = false;
  bool separable = false;
  bool irreducible = false;
  QFactorList factorization;  // attached when the specialization degrades
  bool accepted = false;      // full degree, separable, irreducible,
                              // and (when expected) degree preserved
  // filled only when the point is accepted:
  std::shared_ptr<const AbsField> ehat_t;  // splitting field of P(t, X)
  std::vector<FElem> roots;
  int closure_degree = 0;                  // [Ehat_t : Q]
  std::optional<int> expected_closure_degree;
  bool degree_preserved = false;
};

/// Specialize the defining polynomial of a Galois closure at T = t and build
/// the residue field. When P(t, X) fails to be irreducible and separable of
/// full degree, the report is degraded and carries the factorization.
SpecializationReport specialize(const BiPoly& ehat_defining, const Rat& t,
                                std::optional<int> expected_closure_degree =
                                    std::nullopt,
                                int degree_cap = kFieldDegreeCap);

struct HilbertRejection {
  Rat t;
  std::string reason;
};

struct HilbertResult {
  Rat t;  // the accepted point
  std::vector<HilbertRejection> rejections;  // every point tried before it
};

/// First t in the canonical order 0, 1, -1, 2, -2, ... at which every listed
/// polynomial specializes to an irreducible separable polynomial of full
/// degree. budget bounds |t|. Error("BudgetExhausted", ...) lists the
/// rejection reasons.
HilbertResult hilbert_search(const std::vector<BiPoly>& polys, int budget = 25);

/// Witness z with f(z, X) of full degree and irreducible over the number
/// field k; certifies irreducibility of f over k(T) (monic factors over k(T)
/// have coefficients integral over Q[T], hence specialize pole-free).
std::optional<Rat> constant_extension_witness(
    const std::shared_ptr<const AbsField>& k, const BiPoly& f, int budget = 40);

/// The standing battery of small constant extensions: Q(sqrt d) for
/// d in {-1, 2, -2, 3, -3, 5} and Q(zeta_3).
const std::vector<QPoly>& regularity_battery();

struct RegularityVerdict {
  bool proxy_regular = false;
  std::vector<CheckItem> fields;  // one item per battery field
};

/// Proxy for "no new constants": the defining polynomial stays irreducible
/// over every battery extension (plus any extra minimal polynomials, e.g.
/// the problem's own Galois closure). Never claims full regularity.
RegularityVerdict regularity_spot_check(
    const BiPoly& f, const std::vector<QPoly>& extra_minpolys = {},
    int budget = 40);

}  // namespace regal

#endif
