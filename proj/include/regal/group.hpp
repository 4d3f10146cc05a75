#ifndef REGAL_GROUP_HPP
#define REGAL_GROUP_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace regal {

/// Finite group given by its Cayley table. Elements are ids 0..order-1 with
/// 0 the identity.
struct FiniteGroup {
  std::string name;
  int order = 1;
  std::vector<std::vector<int>> table;  // table[a][b] = a*b
  std::vector<std::string> labels;      // optional, size order when present

  int op(int a, int b) const { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inv(int a) const;
  int element_order(int a) const;
  bool is_abelian() const;

  /// Throws Error("InvalidGroup", ...) unless the table is a group with
  /// identity 0.
  void validate() const;

  /// Subgroup generated by the given elements, as a sorted id list.
  std::vector<int> closure(std::vector<int> gens) const;
  bool is_subgroup(const std::vector<int>& elems) const;  // sorted ids

  /// Sorted multiset of element orders — a cheap isomorphism invariant.
  std::vector<int> order_profile() const;

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);
  static FiniteGroup symmetric(int n);     // n <= 4
  static FiniteGroup dihedral(int n);      // order 2n, n >= 2
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  /// Named standard: C1..C6 style literals, V4, S3, S4, D4.
  static FiniteGroup from_literal(const std::string& lit);

  static FiniteGroup from_json_text(const std::string& text);
  std::string to_json_text() const;

  bool same_table(const FiniteGroup& o) const {
    return order == o.order && table == o.table;
  }
};

inline constexpr int kGroupSearchCap = 64;  // exhaustive-search order cap

struct GroupHom {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<int> map;  // size source.order

  int operator()(int a) const { return map[static_cast<std::size_t>(a)]; }
  bool is_hom() const;
  bool is_injective() const;
  bool is_surjective() const;
  void validate() const;  // Error("InvalidHom") unless multiplicative

  std::vector<int> kernel_elements() const;  // sorted ids in source
  std::vector<int> image_elements() const;   // sorted ids in target

  static GroupHom identity(const FiniteGroup& g);
  static GroupHom to_trivial(const FiniteGroup& g);
  /// this ∘ inner (apply inner first).
  GroupHom compose(const GroupHom& inner) const;
};

/// A subgroup repackaged as a standalone group: the new group together with
/// the inclusion homomorphism into the ambient group. Element 0 of the new
/// group is the identity.
std::pair<FiniteGroup, GroupHom> subgroup_as_group(const FiniteGroup& g,
                                                   const std::vector<int>& elems);

/// kernel(h) as a group with its embedding into the source.
std::pair<FiniteGroup, GroupHom> kernel(const GroupHom& h);

/// Section of an epimorphism: s with alpha∘s = id. Deterministic backtracking
/// over generator preimages; exhaustive for |target| <= 64.
std::optional<GroupHom> find_section(const GroupHom& alpha);

/// Explicit isomorphism or nullopt; exhaustive with element-order pruning.
std::optional<GroupHom> is_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

/// N_G(S) as a sorted id list; S must be a subgroup (sorted ids).
std::vector<int> normalizer(const FiniteGroup& g, const std::vector<int>& s);

struct FiberProduct {
  FiniteGroup group;                      // G' = {(g,b) : alpha(g) = rho(b)}
  std::vector<std::pair<int, int>> pairs; // element id -> (g, b)
  GroupHom proj1;                         // G' -> source(alpha)
  GroupHom proj2;                         // G' -> source(rho)
};

/// Pullback of alpha: G -> A and rho: B -> A (shared target A).
FiberProduct fiber_product(const GroupHom& alpha, const GroupHom& rho);

/// {(1,b)} inside the fiber product, isomorphic to ker(rho). Sorted ids in
/// fp.group.
std::vector<int> kernel_of_first_projection(const FiberProduct& fp);

/// delta(s) = (gamma_prime(s), s) into the fiber product of alpha and rho,
/// where rho = fp.proj2-compatible comparison map. Requires
/// alpha∘gamma_prime = rho element-wise; checks alpha'∘delta = id.
GroupHom build_delta(const FiberProduct& fp, const GroupHom& gamma_prime);

}  // namespace regal

#endif
