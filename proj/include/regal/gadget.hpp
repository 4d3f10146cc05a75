#ifndef REGAL_GADGET_HPP
#define REGAL_GADGET_HPP

#include <string>
#include <vector>

#include "regal/bipoly.hpp"

namespace regal {

/// The trinomial family X^3 + (T-y)X + (T-y): irreducible over Q(T),
/// separable, with Galois group S3, for every rational y.
struct TrinomialGadget {
  Rat y;
  BiPoly poly;            // X^3 + (T-y)X + (T-y)
  QPoly disc;             // -(T-y)^2 (4(T-y) + 27), expanded
  Rat irreducibility_witness;  // t with poly(t, X) irreducible over Q
  bool s3_certified = false;   // disc non-square: odd multiplicity part
};

TrinomialGadget make_gadget(const Rat& y);

/// T-roots of the discriminant: {y, y - 27/4}.
std::vector<Rat> branch_points(const TrinomialGadget& g);

struct DistinctnessCertificate {
  bool distinct = false;
  std::string method;  // "branch-loci" or "specialization"
  std::vector<Rat> loci1, loci2;
  std::optional<Rat> witness_t;  // specialization separating the two fields
};

/// Certificate that the gadget fields at y1 != y2 differ.
DistinctnessCertificate gadget_distinctness(const Rat& y1, const Rat& y2);

}  // namespace regal

#endif
