#ifndef REGAL_TOWER_HPP
#define REGAL_TOWER_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "regal/bipoly.hpp"
#include "regal/group.hpp"
#include "regal/linalg.hpp"
#include "regal/numfield.hpp"

namespace regal {

/// Automorphism group of a number field, acting through images of the
/// absolute generator. Element 0 is the identity.
struct AutGroup {
  std::shared_ptr<const AbsField> field;
  FiniteGroup group;
  std::vector<FElem> images;  // size group.order

  int order() const { return group.order; }
};

/// sigma(x) for sigma an element id of the automorphism group.
FElem apply_aut(const AutGroup& g, int elem, const FElem& x);

/// Assemble the Cayley table from a complete list of automorphism images
/// (closed under composition). The identity is reindexed to 0 and the rest
/// sorted by representative for determinism.
AutGroup aut_group_from_images(const std::shared_ptr<const AbsField>& l,
                               std::vector<FElem> images);

/// Aut(L / k) where k is described by elements of L that must be fixed
/// pointwise. Root-finding path: needs [L:Q]^2 within the factorization cap.
AutGroup automorphism_group(const std::shared_ptr<const AbsField>& l,
                            const std::vector<FElem>& fixed = {});

/// One adjunction made while building a splitting field.
struct SplittingStep {
  std::vector<QPoly> factor_reps;  // adjoined factor; coefficient j is a rep
                                   // over the previous absolute generator
  Rat mix;                         // gamma_new = x + mix * gamma_old
};

struct SplittingField {
  QPoly poly;                           // the split polynomial (over Q)
  std::shared_ptr<const AbsField> field;
  std::vector<FElem> roots;             // all roots of poly, sorted
  std::vector<FElem> chain_roots;       // adjoined roots x_1..x_m
  std::vector<FElem> chain_gammas;      // gamma_0 = 0, gamma_1, ..., gamma_m
  std::vector<SplittingStep> steps;
};

/// Splitting field of a separable polynomial over Q.
SplittingField splitting_field(const QPoly& f, int degree_cap = kFieldDegreeCap);

/// Gal(L/Q) for a splitting field, via backtracking over images of the chain
/// roots; scales to degree 24 where the root-finding path cannot.
AutGroup galois_group(const SplittingField& sf);

/// A subfield of F presented by the image of its abstract generator.
struct Subfield {
  std::shared_ptr<const AbsField> field;  // abstract presentation
  FElem gen_in_big;                       // generator's image in F
};

/// Coordinates of x in the power basis of its field.
RatVec coords(const FElem& x);

/// Express x as an element of the subfield, or nullopt if x lies outside.
std::optional<FElem> to_subfield(const Subfield& sub, const FElem& x);

/// Minimal polynomial of x over Q (monic), by linear algebra on powers.
QPoly minpoly_of(const FElem& x);

/// The partial restriction homomorphism Aut(F/M) -> Aut(L/k): defined on the
/// setwise stabilizer of L.
struct RestrictionMap {
  std::vector<int> domain;  // sorted ids in big.group
  std::vector<int> map;     // size big order; -1 outside the domain
};

RestrictionMap restriction_map(const AutGroup& big, const Subfield& l,
                               const AutGroup& small);

/// Galois-correspondence check: with L-hat the Galois closure, H the
/// normalizer of Gal(L-hat/L), the restriction induces an isomorphism
/// H / Gal(L-hat/L) = Aut(L/k). Always TRUE; FALSE certifies a bug.
bool normalizer_model_check(const std::shared_ptr<const AbsField>& l,
                            int degree_cap = kFieldDegreeCap);

/// TRUE iff [Q(a,b):Q] = [Q(a):Q] * [Q(b):Q] inside the common field.
bool linear_disjointness_check(const FElem& a, const FElem& b);

/// Fixed field of a subgroup of automorphisms, with its embedding.
Subfield fixed_field(const AutGroup& aut, const std::vector<int>& subgroup_ids,
                     const std::string& label);

/// Appendix-style coefficient collection for E = M(x) with M = Q(s):
/// verify the listed conjugate expressions make E/M Galois and report the
/// field generated by the coefficients.
struct DescentInput {
  BiPoly minpoly;                   // minpoly of x over Q(s), monic in X
  std::vector<FTPoly> conjugates;   // P_i(x), including x itself
  FTPoly generator_expr;            // Q(x) for the distinguished generator
};

struct DescentResult {
  bool coefficients_use_s = false;
  std::string field_of_definition;  // "Q" or "Q(s)"
};

DescentResult coefficient_descent(const DescentInput& in);

}  // namespace regal

#endif
