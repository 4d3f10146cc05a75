#ifndef REGAL_CATALOG_HPP
#define REGAL_CATALOG_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regal/bipoly.hpp"
#include "regal/gadget.hpp"
#include "regal/group.hpp"
#include "regal/verdict.hpp"

namespace regal {

/// One explicit regular Galois realization over Q(Z): a monic polynomial in
/// X over Q[Z] whose root field is Galois over Q(Z) with the stated group.
struct RealizationEntry {
  std::string name;  // C1, C2, C3, C4, V4, S3, C6, S4, or user-chosen
  FiniteGroup group;
  BiPoly poly;  // in (Z, X), monic in X of degree |group|
  /// Root maps certifying automorphisms: rational maps num(X)/den(X) with
  /// coefficients in Q[Z], applied to the generic root. Used by the cyclic
  /// and Klein-four verification recipes.
  std::vector<std::pair<std::string, std::string>> root_maps;
  std::string notes;
  bool verified = false;
};

struct CatalogVerdict {
  std::string entry;
  bool pass = false;
  std::vector<CheckItem> checks;
};

/// The shipped entries: C1, C2, C3, C4, V4, S3, C6, S4.
std::vector<RealizationEntry> builtin_catalog();

/// First entry whose group is isomorphic to g, or nullptr.
const RealizationEntry* find_entry(const std::vector<RealizationEntry>& cat,
                                   const FiniteGroup& g);
const RealizationEntry* find_entry_by_name(const std::vector<RealizationEntry>& cat,
                                           const std::string& name);

/// Full verification of one entry: irreducibility over Q(Z) by specialization
/// witness, a per-shape Galois-group certificate (degree, discriminant
/// squareness, root maps, resolvent, or compositum structure), a sampled
/// specialization whose Galois group is computed independently, and a
/// constant-field battery (irreducibility over small quadratic and cyclotomic
/// extensions). Throws Error("CheckFailed", ...) only on malformed input;
/// verification failures are reported in the verdict.
CatalogVerdict catalog_self_check(const RealizationEntry& entry);

std::vector<RealizationEntry> catalog_from_json_text(const std::string& text);
std::string catalog_to_json_text(const std::vector<RealizationEntry>& entries);

/// The function-field tower E = N(T, x) with x a root of the trinomial
/// family at parameter y, over the field N cut out by a catalog entry.
struct KilledTower {
  RealizationEntry entry;
  Rat y;
  TrinomialGadget gadget;
  int group_degree = 1;  // [N : Q(Z)] = |G|
  int total_degree = 3;  // [E : Q(Z,T)] = 3 |G|
  Rat z_witness;         // Z-specialization giving a degree-|G| number field
  Rat t_witness;         // T-specialization certifying [E : N(T)] = 3
};

/// Certify the degree ledger of the tower: the trinomial stays irreducible
/// over N(T), by a specialization witness over the specialized coefficient
/// field. Error("GadgetCollapse") when no witness exists within budget.
KilledTower kill_automorphisms(const RealizationEntry& entry, const Rat& y);

}  // namespace regal

#endif
