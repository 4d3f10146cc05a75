#include "regal/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <json.hpp>

#include "regal/errors.hpp"

namespace regal {

int FiniteGroup::inv(int a) const {
  for (int b = 0; b < order; ++b)
    if (op(a, b) == 0) return b;
  fail("InvalidGroup", "element without inverse");
}

int FiniteGroup::element_order(int a) const {
  int k = 1, x = a;
  while (x != 0) {
    x = op(x, a);
    ++k;
    if (k > order) fail("InvalidGroup", "element order exceeds group order");
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

void FiniteGroup::validate() const {
  if (order <= 0) fail("InvalidGroup", "non-positive order");
  if (static_cast<int>(table.size()) != order)
    fail("InvalidGroup", "table row count differs from order");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != order)
      fail("InvalidGroup", "table row length differs from order");
    for (int v : row)
      if (v < 0 || v >= order) fail("InvalidGroup", "table entry out of range");
  }
  for (int a = 0; a < order; ++a)
    if (op(0, a) != a || op(a, 0) != a)
      fail("InvalidGroup", "element 0 is not a two-sided identity");
  for (int a = 0; a < order; ++a) {
    bool has_inv = false;
    for (int b = 0; b < order; ++b)
      if (op(a, b) == 0 && op(b, a) == 0) { has_inv = true; break; }
    if (!has_inv) fail("InvalidGroup", "element without two-sided inverse");
  }
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (op(op(a, b), c) != op(a, op(b, c)))
          fail("InvalidGroup", "operation is not associative");
  if (!labels.empty() && static_cast<int>(labels.size()) != order)
    fail("InvalidGroup", "label count differs from order");
}

std::vector<int> FiniteGroup::closure(std::vector<int> gens) const {
  std::set<int> seen{0};
  std::vector<int> work{0};
  for (int g : gens)
    if (seen.insert(g).second) work.push_back(g);
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j < work.size(); ++j) {
      int p = op(work[i], work[j]);
      if (seen.insert(p).second) work.push_back(p);
    }
  return {seen.begin(), seen.end()};
}

bool FiniteGroup::is_subgroup(const std::vector<int>& elems) const {
  if (elems.empty() || !std::binary_search(elems.begin(), elems.end(), 0))
    return false;
  for (int a : elems)
    for (int b : elems)
      if (!std::binary_search(elems.begin(), elems.end(), op(a, b))) return false;
  return true;
}

std::vector<int> FiniteGroup::order_profile() const {
  std::vector<int> p;
  for (int a = 0; a < order; ++a) p.push_back(element_order(a));
  std::sort(p.begin(), p.end());
  return p;
}

FiniteGroup FiniteGroup::trivial() {
  FiniteGroup g;
  g.name = "C1";
  g.order = 1;
  g.table = {{0}};
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) fail("InvalidGroup", "cyclic group needs order >= 1");
  FiniteGroup g;
  g.name = "C" + std::to_string(n);
  g.order = n;
  g.table.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return g;
}

namespace {

std::vector<std::vector<int>> permutations_of(int n) {
  std::vector<int> base(static_cast<std::size_t>(n));
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

}  // namespace

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 4) fail("InvalidGroup", "symmetric group supported for n <= 4");
  auto perms = permutations_of(n);  // lex order; identity first
  std::map<std::vector<int>, int> idx;
  for (std::size_t i = 0; i < perms.size(); ++i) idx[perms[i]] = static_cast<int>(i);
  FiniteGroup g;
  g.name = "S" + std::to_string(n);
  g.order = static_cast<int>(perms.size());
  g.table.assign(perms.size(), std::vector<int>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<int> c(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        c[static_cast<std::size_t>(i)] =
            perms[a][static_cast<std::size_t>(perms[b][static_cast<std::size_t>(i)])];
      g.table[a][b] = idx[c];
    }
  for (const auto& p : perms) {
    std::string s = "(";
    for (int v : p) s += std::to_string(v);
    s += ")";
    g.labels.push_back(s);
  }
  return g;
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 2) fail("InvalidGroup", "dihedral group needs n >= 2");
  // elements r^i s^j with id = i + n*j; s r = r^{-1} s
  FiniteGroup g;
  g.name = "D" + std::to_string(n);
  g.order = 2 * n;
  g.table.assign(static_cast<std::size_t>(2 * n), std::vector<int>(static_cast<std::size_t>(2 * n)));
  auto id = [n](int i, int j) { return i + n * j; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < 2; ++l) {
          // (r^i s^j)(r^k s^l) = r^{i + (-1)^j k} s^{j+l}
          int ii = ((j == 0 ? i + k : i - k) % n + n) % n;
          g.table[static_cast<std::size_t>(id(i, j))][static_cast<std::size_t>(id(k, l))] =
              id(ii, (j + l) % 2);
        }
  return g;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  FiniteGroup g;
  g.name = a.name + "x" + b.name;
  g.order = a.order * b.order;
  auto id = [&](int x, int y) { return x * b.order + y; };
  g.table.assign(static_cast<std::size_t>(g.order), std::vector<int>(static_cast<std::size_t>(g.order)));
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int y1 = 0; y1 < b.order; ++y1)
      for (int x2 = 0; x2 < a.order; ++x2)
        for (int y2 = 0; y2 < b.order; ++y2)
          g.table[static_cast<std::size_t>(id(x1, y1))][static_cast<std::size_t>(id(x2, y2))] =
              id(a.op(x1, x2), b.op(y1, y2));
  return g;
}

FiniteGroup FiniteGroup::from_literal(const std::string& lit) {
  if (lit == "C1") return trivial();
  if (lit == "C2") return cyclic(2);
  if (lit == "C3") return cyclic(3);
  if (lit == "C4") return cyclic(4);
  if (lit == "C5") return cyclic(5);
  if (lit == "C6") return cyclic(6);
  if (lit == "V4") {
    FiniteGroup g = direct_product(cyclic(2), cyclic(2));
    g.name = "V4";
    return g;
  }
  if (lit == "S3") return symmetric(3);
  if (lit == "S4") return symmetric(4);
  if (lit == "D4") return dihedral(4);
  fail("UnknownGroupLiteral", "unknown group literal '" + lit + "'");
}

FiniteGroup FiniteGroup::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail("ParseError", std::string("bad group JSON: ") + e.what());
  }
  FiniteGroup g;
  try {
    g.order = j.at("order").get<int>();
    g.table = j.at("table").get<std::vector<std::vector<int>>>();
    if (j.contains("name")) g.name = j["name"].get<std::string>();
    if (j.contains("labels")) g.labels = j["labels"].get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    fail("ParseError", std::string("bad group JSON: ") + e.what());
  }
  g.validate();
  return g;
}

std::string FiniteGroup::to_json_text() const {
  nlohmann::json j;
  if (!name.empty()) j["name"] = name;
  j["order"] = order;
  j["table"] = table;
  if (!labels.empty()) j["labels"] = labels;
  return j.dump(2);
}

// ---------------------------------------------------------------------------
// Homomorphisms.
// ---------------------------------------------------------------------------

bool GroupHom::is_hom() const {
  if (static_cast<int>(map.size()) != source.order) return false;
  for (int v : map)
    if (v < 0 || v >= target.order) return false;
  if (map[0] != 0) return false;
  for (int a = 0; a < source.order; ++a)
    for (int b = 0; b < source.order; ++b)
      if ((*this)(source.op(a, b)) != target.op((*this)(a), (*this)(b)))
        return false;
  return true;
}

bool GroupHom::is_injective() const {
  std::set<int> img(map.begin(), map.end());
  return static_cast<int>(img.size()) == source.order;
}

bool GroupHom::is_surjective() const {
  std::set<int> img(map.begin(), map.end());
  return static_cast<int>(img.size()) == target.order;
}

void GroupHom::validate() const {
  if (!is_hom()) fail("InvalidHom", "map is not a homomorphism");
}

std::vector<int> GroupHom::kernel_elements() const {
  std::vector<int> k;
  for (int a = 0; a < source.order; ++a)
    if ((*this)(a) == 0) k.push_back(a);
  return k;
}

std::vector<int> GroupHom::image_elements() const {
  std::set<int> img(map.begin(), map.end());
  return {img.begin(), img.end()};
}

GroupHom GroupHom::identity(const FiniteGroup& g) {
  GroupHom h{g, g, {}};
  h.map.resize(static_cast<std::size_t>(g.order));
  std::iota(h.map.begin(), h.map.end(), 0);
  return h;
}

GroupHom GroupHom::to_trivial(const FiniteGroup& g) {
  return GroupHom{g, FiniteGroup::trivial(),
                  std::vector<int>(static_cast<std::size_t>(g.order), 0)};
}

GroupHom GroupHom::compose(const GroupHom& inner) const {
  if (!inner.target.same_table(source))
    fail("TargetMismatch", "composition of incompatible homomorphisms");
  GroupHom h{inner.source, target, {}};
  for (int v : inner.map) h.map.push_back((*this)(v));
  return h;
}

std::pair<FiniteGroup, GroupHom> subgroup_as_group(const FiniteGroup& g,
                                                   const std::vector<int>& elems) {
  if (!g.is_subgroup(elems)) fail("NotASubgroup", "element set is not a subgroup");
  std::map<int, int> back;
  for (std::size_t i = 0; i < elems.size(); ++i) back[elems[i]] = static_cast<int>(i);
  FiniteGroup s;
  s.order = static_cast<int>(elems.size());
  s.table.assign(elems.size(), std::vector<int>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j)
      s.table[i][j] = back.at(g.op(elems[i], elems[j]));
  // ids in 'elems' are sorted so the identity 0 of g maps to new id 0
  GroupHom inc{s, g, std::vector<int>(elems.begin(), elems.end())};
  return {s, inc};
}

std::pair<FiniteGroup, GroupHom> kernel(const GroupHom& h) {
  return subgroup_as_group(h.source, h.kernel_elements());
}

// ---------------------------------------------------------------------------
// Backtracking searches.
// ---------------------------------------------------------------------------

namespace {

/// Close a partial map s: Q -> G (entries -1 unknown) under multiplication.
/// Returns false on a conflict.
bool close_partial(const FiniteGroup& q, const FiniteGroup& g, std::vector<int>& s) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < q.order; ++a) {
      if (s[static_cast<std::size_t>(a)] < 0) continue;
      for (int b = 0; b < q.order; ++b) {
        if (s[static_cast<std::size_t>(b)] < 0) continue;
        int prod = q.op(a, b);
        int v = g.op(s[static_cast<std::size_t>(a)], s[static_cast<std::size_t>(b)]);
        int& slot = s[static_cast<std::size_t>(prod)];
        if (slot < 0) {
          slot = v;
          changed = true;
        } else if (slot != v) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Pick the next undefined element: minimal (element order, id) — the
/// deterministic generator order.
int next_unassigned(const FiniteGroup& q, const std::vector<int>& s) {
  int best = -1, best_ord = 0;
  for (int a = 0; a < q.order; ++a) {
    if (s[static_cast<std::size_t>(a)] >= 0) continue;
    int o = q.element_order(a);
    if (best < 0 || o < best_ord) {
      best = a;
      best_ord = o;
    }
  }
  return best;
}

bool search_hom(const FiniteGroup& q, const FiniteGroup& g, std::vector<int>& s,
                const std::vector<std::vector<int>>& candidates, bool injective) {
  std::vector<int> saved = s;
  if (!close_partial(q, g, s)) {
    s = saved;
    return false;
  }
  if (injective) {
    std::set<int> used;
    for (int v : s)
      if (v >= 0 && !used.insert(v).second) {
        s = saved;
        return false;
      }
  }
  int a = next_unassigned(q, s);
  if (a < 0) return true;
  for (int c : candidates[static_cast<std::size_t>(a)]) {
    std::vector<int> trial = s;
    trial[static_cast<std::size_t>(a)] = c;
    if (search_hom(q, g, trial, candidates, injective)) {
      s = std::move(trial);
      return true;
    }
  }
  s = saved;
  return false;
}

}  // namespace

std::optional<GroupHom> find_section(const GroupHom& alpha) {
  alpha.validate();
  if (!alpha.is_surjective()) fail("NotEpimorphism", "section search needs an epimorphism");
  if (alpha.target.order > kGroupSearchCap)
    fail("OrderCapExceeded", "target order exceeds the exhaustive-search cap");
  const FiniteGroup& q = alpha.target;
  const FiniteGroup& g = alpha.source;
  std::vector<std::vector<int>> candidates(static_cast<std::size_t>(q.order));
  for (int x = 0; x < g.order; ++x)
    candidates[static_cast<std::size_t>(alpha(x))].push_back(x);
  std::vector<int> s(static_cast<std::size_t>(q.order), -1);
  s[0] = 0;
  if (!search_hom(q, g, s, candidates, /*injective=*/false)) return std::nullopt;
  GroupHom sec{q, g, s};
  sec.validate();
  // alpha ∘ s = id
  for (int a = 0; a < q.order; ++a)
    if (alpha(sec(a)) != a) fail("InternalError", "section check failed");
  return sec;
}

std::optional<GroupHom> is_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order != h.order) fail("OrderMismatch", "groups have different orders");
  if (g.order > kGroupSearchCap)
    fail("OrderCapExceeded", "order exceeds the exhaustive-search cap");
  if (g.order_profile() != h.order_profile()) return std::nullopt;
  std::vector<std::vector<int>> candidates(static_cast<std::size_t>(g.order));
  for (int a = 0; a < g.order; ++a) {
    int o = g.element_order(a);
    for (int b = 0; b < h.order; ++b)
      if (h.element_order(b) == o) candidates[static_cast<std::size_t>(a)].push_back(b);
  }
  std::vector<int> s(static_cast<std::size_t>(g.order), -1);
  s[0] = 0;
  if (!search_hom(g, h, s, candidates, /*injective=*/true)) return std::nullopt;
  GroupHom iso{g, h, s};
  iso.validate();
  if (!iso.is_injective() || !iso.is_surjective())
    fail("InternalError", "isomorphism search returned a non-bijection");
  return iso;
}

std::vector<int> normalizer(const FiniteGroup& g, const std::vector<int>& s) {
  if (!g.is_subgroup(s)) fail("NotASubgroup", "normalizer needs a subgroup");
  std::vector<int> n;
  for (int x = 0; x < g.order; ++x) {
    int xi = g.inv(x);
    bool ok = true;
    for (int a : s)
      if (!std::binary_search(s.begin(), s.end(), g.op(g.op(x, a), xi))) {
        ok = false;
        break;
      }
    if (ok) n.push_back(x);
  }
  return n;
}

FiberProduct fiber_product(const GroupHom& alpha, const GroupHom& rho) {
  alpha.validate();
  rho.validate();
  if (!alpha.target.same_table(rho.target))
    fail("TargetMismatch", "pullback needs a shared target");
  FiberProduct fp;
  std::map<std::pair<int, int>, int> idx;
  for (int a = 0; a < alpha.source.order; ++a)
    for (int b = 0; b < rho.source.order; ++b)
      if (alpha(a) == rho(b)) {
        idx[{a, b}] = static_cast<int>(fp.pairs.size());
        fp.pairs.emplace_back(a, b);
      }
  FiniteGroup& g2 = fp.group;
  g2.name = "FiberProduct";
  g2.order = static_cast<int>(fp.pairs.size());
  g2.table.assign(fp.pairs.size(), std::vector<int>(fp.pairs.size()));
  for (std::size_t i = 0; i < fp.pairs.size(); ++i)
    for (std::size_t j = 0; j < fp.pairs.size(); ++j) {
      auto [a1, b1] = fp.pairs[i];
      auto [a2, b2] = fp.pairs[j];
      g2.table[i][j] = idx.at({alpha.source.op(a1, a2), rho.source.op(b1, b2)});
    }
  fp.proj1 = GroupHom{g2, alpha.source, {}};
  fp.proj2 = GroupHom{g2, rho.source, {}};
  for (auto& [a, b] : fp.pairs) {
    fp.proj1.map.push_back(a);
    fp.proj2.map.push_back(b);
  }
  return fp;
}

std::vector<int> kernel_of_first_projection(const FiberProduct& fp) {
  std::vector<int> k;
  for (std::size_t i = 0; i < fp.pairs.size(); ++i)
    if (fp.pairs[i].first == 0) k.push_back(static_cast<int>(i));
  return k;
}

GroupHom build_delta(const FiberProduct& fp, const GroupHom& gamma_prime) {
  gamma_prime.validate();
  if (!gamma_prime.source.same_table(fp.proj2.target))
    fail("TargetMismatch", "gamma' must be defined on the second factor");
  if (!gamma_prime.target.same_table(fp.proj1.target))
    fail("TargetMismatch", "gamma' must land in the first factor");
  std::map<std::pair<int, int>, int> idx;
  for (std::size_t i = 0; i < fp.pairs.size(); ++i) idx[fp.pairs[i]] = static_cast<int>(i);
  GroupHom delta{gamma_prime.source, fp.group, {}};
  for (int s = 0; s < gamma_prime.source.order; ++s) {
    auto it = idx.find({gamma_prime(s), s});
    if (it == idx.end())
      fail("CompatibilityFailure", "alpha∘gamma' differs from the comparison map");
    delta.map.push_back(it->second);
  }
  delta.validate();
  for (int s = 0; s < gamma_prime.source.order; ++s)
    if (fp.proj2(delta(s)) != s) fail("InternalError", "delta section check failed");
  return delta;
}

}  // namespace regal
