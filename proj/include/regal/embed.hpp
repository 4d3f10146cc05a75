#ifndef REGAL_EMBED_HPP
#define REGAL_EMBED_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "regal/bipoly.hpp"
#include "regal/group.hpp"
#include "regal/tower.hpp"
#include "regal/verdict.hpp"

namespace regal {

/// An embedding problem over Q: an epimorphism alpha from G onto the
/// automorphism group of a finite separable extension L/Q.
struct EmbeddingProblem {
  FiniteGroup g;
  std::shared_ptr<const AbsField> l;
  AutGroup aut;     // Aut(L/Q) in the canonical presentation
  GroupHom alpha;   // g -> aut.group, surjective
};

/// Builds the problem and validates: alpha a well-formed epimorphism onto
/// the independently computed Aut(L/Q). Error("NotEpimorphism") otherwise.
EmbeddingProblem make_problem(const FiniteGroup& g,
                              std::shared_ptr<const AbsField> l,
                              const std::vector<int>& alpha_map);

/// L = Q: alpha is the unique map onto the trivial group.
EmbeddingProblem trivial_problem(const FiniteGroup& g);

/// Section of alpha, when one exists.
std::optional<GroupHom> is_split(const EmbeddingProblem& ep);

/// A solution presented over Q: a field E containing L together with an
/// isomorphism beta from Aut(E/Q) onto G commuting with restriction.
struct SolutionCertificate {
  EmbeddingProblem problem;
  std::shared_ptr<const AbsField> e;
  FElem l_in_e;    // image of L's generator in E
  GroupHom beta;   // Aut(E/Q).group (canonical ordering) -> problem.g
  /// Provenance of the function-field solution this was specialized from,
  /// when applicable; enables the constant-field proxy re-check.
  std::optional<BiPoly> generic_poly;
  std::string regularity = "n/a";  // "certified" | "assumed" | "n/a"
};

struct VerificationReport {
  std::vector<CheckItem> checks;  // (a) embedding, (b) restriction-domain,
                                  // (c) beta-bijective, (d) commutation,
                                  // (e) regularity
  bool pass = false;
  std::string failing;  // first failing check name, empty when pass
};

/// Re-derives Aut(E/Q) from scratch and checks the certificate against it.
VerificationReport verify_solution(const SolutionCertificate& cert);

/// Base change of the problem to a linearly disjoint field M (or to Q(T),
/// where disjointness from the Galois closure is automatic).
struct BaseChangeResult {
  bool function_field = false;            // M = Q(T)
  std::shared_ptr<const AbsField> m;      // set when M is a number field
  std::shared_ptr<const AbsField> lm;     // compositum LM
  FElem l_in_lm, m_in_lm;
  AutGroup aut_lm;                        // Aut(LM/M)
  GroupHom alpha_m;                       // g -> aut_lm.group
  GroupHom res_iso;                       // aut_lm.group -> problem.aut.group
};

/// M = Q(T): the restriction is an isomorphism by flat base change; the
/// problem is carried over unchanged at the group level.
BaseChangeResult base_change_to_function_field(const EmbeddingProblem& ep);

/// M a number field: requires M linearly disjoint from the Galois closure
/// of L. Error("NotLinearlyDisjoint") otherwise.
BaseChangeResult base_change(const EmbeddingProblem& ep,
                             const std::shared_ptr<const AbsField>& m);

/// The fiber-product reduction of Appendix-style form: dominate the problem
/// by a split one over a Galois extension L' containing L.
struct ReductionPackage {
  EmbeddingProblem problem;
  std::shared_ptr<const AbsField> lprime;
  FElem l_in_lprime;
  AutGroup gal_lprime;     // Gal(L'/Q)
  GroupHom gamma_prime;    // Gal(L'/Q) -> G with alpha o gamma' = res
  FiberProduct fp;         // of alpha and the restriction map
  GroupHom alpha_prime;    // G' -> Gal(L'/Q), surjective
  GroupHom delta;          // section: Gal(L'/Q) -> G', alpha' o delta = id
  GroupHom beta_proj;      // G' -> G, first projection
};

/// Builds and verifies the package. gamma_prime_map gives images of
/// Gal(L'/Q) elements in G; when empty, a compatible gamma' is searched
/// deterministically. Errors: NotGalois, CompatibilityFailure,
/// InclusionNotProvided.
ReductionPackage reduce_via_fiber_product(
    const EmbeddingProblem& ep, const std::shared_ptr<const AbsField>& lprime,
    const FElem& l_in_lprime, const std::vector<int>& gamma_prime_map = {});

/// Push a verified solution of the reduced split problem down to the
/// original problem: E' is the fixed field of ker(beta_proj o beta') in E.
/// cert_prime solves the problem (G', L', alpha') attached to pkg.
/// Error("UpstreamUnverified") when cert_prime fails verification.
SolutionCertificate push_solution(const ReductionPackage& pkg,
                                  const SolutionCertificate& cert_prime);

/// First isomorphism b: s -> alpha.source (in deterministic image order) with
/// alpha(b(sigma)) = res[sigma]; nullopt when none exists.
std::optional<std::vector<int>> find_commuting_isomorphism(
    const FiniteGroup& s, const GroupHom& alpha, const std::vector<int>& res);

/// JSON round trip for certificates: everything needed for stateless
/// re-verification is embedded (group tables, minimal polynomials,
/// homomorphism tables, the embedding image).
std::string certificate_to_json_text(const SolutionCertificate& cert);
SolutionCertificate certificate_from_json_text(const std::string& text);

}  // namespace regal

#endif
