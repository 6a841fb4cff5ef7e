#ifndef GLAB_GROUPOID_HPP
#define GLAB_GROUPOID_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace glab {

// Thrown when an enumeration would exceed its configured cap.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

class FiniteGroupoid;
using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

/// Subset of the arrows of a fixed groupoid, kept as a membership mask.
/// In the finite discrete topology every such set is clopen and compact.
class ArrowSet {
 public:
  ArrowSet() = default;
  explicit ArrowSet(std::size_t n_arrows) : mask_(n_arrows, 0) {}

  static ArrowSet from_indices(std::size_t n_arrows, const std::vector<int>& idx) {
    ArrowSet s(n_arrows);
    for (int i : idx) s.insert(i);
    return s;
  }

  static ArrowSet full(std::size_t n_arrows) {
    ArrowSet s(n_arrows);
    std::fill(s.mask_.begin(), s.mask_.end(), 1);
    return s;
  }

  std::size_t universe_size() const { return mask_.size(); }

  bool contains(int i) const {
    return i >= 0 && static_cast<std::size_t>(i) < mask_.size() && mask_[i];
  }

  void insert(int i) { mask_.at(i) = 1; }
  void erase(int i) { mask_.at(i) = 0; }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto b : mask_) c += b;
    return c;
  }

  bool empty() const { return size() == 0; }

  /// Member indices in canonical (ascending) order.
  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < mask_.size(); ++i)
      if (mask_[i]) out.push_back(static_cast<int>(i));
    return out;
  }

  ArrowSet complement() const {
    ArrowSet s(mask_.size());
    for (std::size_t i = 0; i < mask_.size(); ++i) s.mask_[i] = mask_[i] ? 0 : 1;
    return s;
  }

  bool subset_of(const ArrowSet& other) const {
    if (other.mask_.size() != mask_.size()) return false;
    for (std::size_t i = 0; i < mask_.size(); ++i)
      if (mask_[i] && !other.mask_[i]) return false;
    return true;
  }

  bool intersects(const ArrowSet& other) const {
    for (std::size_t i = 0; i < std::min(mask_.size(), other.mask_.size()); ++i)
      if (mask_[i] && other.mask_[i]) return true;
    return false;
  }

  friend ArrowSet set_union(const ArrowSet& a, const ArrowSet& b) {
    ArrowSet s(a.mask_.size());
    for (std::size_t i = 0; i < s.mask_.size(); ++i) s.mask_[i] = (a.mask_[i] || b.mask_[i]) ? 1 : 0;
    return s;
  }

  friend ArrowSet set_intersection(const ArrowSet& a, const ArrowSet& b) {
    ArrowSet s(a.mask_.size());
    for (std::size_t i = 0; i < s.mask_.size(); ++i) s.mask_[i] = (a.mask_[i] && b.mask_[i]) ? 1 : 0;
    return s;
  }

  friend bool operator==(const ArrowSet& a, const ArrowSet& b) { return a.mask_ == b.mask_; }
  friend bool operator!=(const ArrowSet& a, const ArrowSet& b) { return !(a == b); }

 private:
  std::vector<std::uint8_t> mask_;
};

/// Groupoid table prior to validation: arrows are indices 0..n-1,
/// compose is a list of (first, second, product) triples.
struct RawGroupoid {
  std::vector<std::string> names;
  std::vector<int> source;
  std::vector<int> range;
  std::vector<int> inverse;
  std::vector<std::array<int, 3>> compose;
};

/// Same table with every arrow referenced by its identifier string.
struct NamedRawGroupoid {
  std::vector<std::string> names;
  std::unordered_map<std::string, std::string> source;
  std::unordered_map<std::string, std::string> range;
  std::unordered_map<std::string, std::string> inverse;
  std::vector<std::array<std::string, 3>> compose;
};

struct GroupoidValidation {
  GroupoidPtr groupoid;  // non-null iff violations is empty
  std::vector<std::string> violations;
  bool ok() const { return violations.empty() && groupoid != nullptr; }
};

/// A finite groupoid with the discrete topology. Arrows are indexed in
/// declaration order; that order is the canonical one used by every greedy
/// procedure and basis construction. Instances are immutable once built.
class FiniteGroupoid {
 public:
  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  int index_of(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
  }

  int source(int i) const { return source_.at(i); }
  int range(int i) const { return range_.at(i); }
  int inverse(int i) const { return inverse_.at(i); }

  bool composable(int g, int h) const { return source_.at(g) == range_.at(h); }

  /// Product g∘h, defined exactly when source(g) = range(h).
  int compose(int g, int h) const {
    int p = compose_.at(g).at(h);
    if (p < 0) throw std::invalid_argument("compose: arrows are not composable");
    return p;
  }

  const std::vector<int>& units() const { return units_; }
  bool is_unit(int i) const { return unit_pos_.at(i) >= 0; }

  /// Position of the unit arrow x within units(), or -1.
  int unit_position(int x) const { return unit_pos_.at(x); }

  /// G_x = {t : source(t) = x}, in canonical order. x must be a unit.
  const std::vector<int>& source_fiber(int x) const {
    int p = unit_pos_.at(x);
    if (p < 0) throw std::invalid_argument("source_fiber: not a unit arrow");
    return fibers_.at(p);
  }

  ArrowSet unit_set() const {
    return ArrowSet::from_indices(names_.size(), units_);
  }

  /// Structural equality: same names and same tables.
  bool same_tables(const FiniteGroupoid& other) const {
    return names_ == other.names_ && source_ == other.source_ &&
           range_ == other.range_ && inverse_ == other.inverse_ &&
           compose_ == other.compose_;
  }

  const RawGroupoid& raw() const { return raw_; }

  friend GroupoidValidation validate_groupoid(const RawGroupoid& raw);

 private:
  FiniteGroupoid() = default;

  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> source_, range_, inverse_;
  std::vector<std::vector<int>> compose_;  // -1 where undefined
  std::vector<int> units_;                 // ascending arrow ids
  std::vector<int> unit_pos_;              // arrow id -> position in units_, or -1
  std::vector<std::vector<int>> fibers_;   // per unit position: G_x
  RawGroupoid raw_;
};

/// Checks the groupoid axioms on a raw table. On success the returned
/// groupoid is fully indexed; otherwise every violation found is reported.
inline GroupoidValidation validate_groupoid(const RawGroupoid& raw) {
  GroupoidValidation result;
  auto& bad = result.violations;
  const int n = static_cast<int>(raw.names.size());

  auto name_of = [&](int i) { return raw.names.at(i); };
  auto in_range = [&](int i) { return i >= 0 && i < n; };

  {
    std::unordered_map<std::string, int> seen;
    for (int i = 0; i < n; ++i) {
      if (!seen.emplace(raw.names[i], i).second)
        bad.push_back("duplicate arrow identifier '" + raw.names[i] + "'");
    }
  }
  if (static_cast<int>(raw.source.size()) != n || static_cast<int>(raw.range.size()) != n ||
      static_cast<int>(raw.inverse.size()) != n) {
    bad.push_back("source/range/inverse must be defined for every arrow");
    return result;
  }
  for (int i = 0; i < n; ++i) {
    if (!in_range(raw.source[i]) || !in_range(raw.range[i]) || !in_range(raw.inverse[i])) {
      bad.push_back("arrow '" + name_of(i) + "' references an undeclared arrow");
      return result;
    }
  }

  // Assemble the composition table from the triples.
  std::vector<std::vector<int>> comp(n, std::vector<int>(n, -1));
  for (const auto& t : raw.compose) {
    if (!in_range(t[0]) || !in_range(t[1]) || !in_range(t[2])) {
      bad.push_back("compose entry references an undeclared arrow");
      return result;
    }
    if (comp[t[0]][t[1]] >= 0 && comp[t[0]][t[1]] != t[2])
      bad.push_back("conflicting products for (" + name_of(t[0]) + ", " + name_of(t[1]) + ")");
    comp[t[0]][t[1]] = t[2];
  }

  // Products exist exactly on composable pairs.
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const bool should = raw.source[g] == raw.range[h];
      if (should && comp[g][h] < 0)
        bad.push_back("missing composite for composable pair (" + name_of(g) + ", " +
                      name_of(h) + ")");
      if (!should && comp[g][h] >= 0)
        bad.push_back("product defined for non-composable pair (" + name_of(g) + ", " +
                      name_of(h) + ")");
    }
  if (!bad.empty()) return result;

  // Involution and the source/range relations.
  for (int g = 0; g < n; ++g) {
    if (raw.inverse[raw.inverse[g]] != g)
      bad.push_back("inverse is not an involution at '" + name_of(g) + "'");
    if (raw.source[raw.inverse[g]] != raw.range[g])
      bad.push_back("source(inverse(g)) != range(g) at '" + name_of(g) + "'");
    if (raw.range[raw.inverse[g]] != raw.source[g])
      bad.push_back("range(inverse(g)) != source(g) at '" + name_of(g) + "'");
  }

  // Units: fixed points of the involution that are idempotent.
  std::vector<int> unit_pos(n, -1);
  std::vector<int> units;
  for (int g = 0; g < n; ++g) {
    if (raw.inverse[g] == g && comp[g][g] == g) {
      unit_pos[g] = static_cast<int>(units.size());
      units.push_back(g);
    }
  }
  for (int u : units) {
    if (raw.source[u] != u || raw.range[u] != u)
      bad.push_back("unit '" + name_of(u) + "' is not its own source and range");
  }
  for (int g = 0; g < n; ++g) {
    if (unit_pos[raw.source[g]] < 0)
      bad.push_back("source of '" + name_of(g) + "' is not a unit");
    if (unit_pos[raw.range[g]] < 0)
      bad.push_back("range of '" + name_of(g) + "' is not a unit");
  }
  if (!bad.empty()) return result;

  // g∘g⁻¹ = range(g), g⁻¹∘g = source(g), and endpoint rules for products.
  for (int g = 0; g < n; ++g) {
    if (comp[g][raw.inverse[g]] != raw.range[g])
      bad.push_back("g∘inverse(g) != range(g) at '" + name_of(g) + "'");
    if (comp[raw.inverse[g]][g] != raw.source[g])
      bad.push_back("inverse(g)∘g != source(g) at '" + name_of(g) + "'");
  }
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      if (comp[g][h] < 0) continue;
      const int p = comp[g][h];
      if (raw.source[p] != raw.source[h] || raw.range[p] != raw.range[g])
        bad.push_back("product (" + name_of(g) + ", " + name_of(h) +
                      ") has inconsistent endpoints");
    }

  // Associativity on all composable triples.
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      if (comp[g][h] < 0) continue;
      for (int k = 0; k < n; ++k) {
        if (comp[h][k] < 0) continue;
        if (comp[comp[g][h]][k] != comp[g][comp[h][k]]) {
          bad.push_back("non-associative triple (" + name_of(g) + ", " + name_of(h) + ", " +
                        name_of(k) + ")");
        }
      }
    }
  if (!bad.empty()) return result;

  auto G = std::shared_ptr<FiniteGroupoid>(new FiniteGroupoid());
  G->names_ = raw.names;
  for (int i = 0; i < n; ++i) G->index_[raw.names[i]] = i;
  G->source_ = raw.source;
  G->range_ = raw.range;
  G->inverse_ = raw.inverse;
  G->compose_ = std::move(comp);
  G->units_ = std::move(units);
  G->unit_pos_ = std::move(unit_pos);
  G->fibers_.resize(G->units_.size());
  for (int g = 0; g < n; ++g) G->fibers_[G->unit_pos_[G->source_[g]]].push_back(g);
  G->raw_ = raw;
  result.groupoid = G;
  return result;
}

inline GroupoidValidation validate_groupoid(const NamedRawGroupoid& named) {
  GroupoidValidation result;
  RawGroupoid raw;
  raw.names = named.names;
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < named.names.size(); ++i)
    index[named.names[i]] = static_cast<int>(i);

  auto resolve = [&](const std::string& s) -> int {
    auto it = index.find(s);
    if (it == index.end()) {
      result.violations.push_back("unknown arrow identifier '" + s + "'");
      return -1;
    }
    return it->second;
  };

  const int n = static_cast<int>(named.names.size());
  raw.source.assign(n, -1);
  raw.range.assign(n, -1);
  raw.inverse.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    const std::string& a = named.names[i];
    auto fetch = [&](const std::unordered_map<std::string, std::string>& m,
                     const char* label) -> int {
      auto it = m.find(a);
      if (it == m.end()) {
        result.violations.push_back(std::string(label) + " missing for arrow '" + a + "'");
        return -1;
      }
      return resolve(it->second);
    };
    raw.source[i] = fetch(named.source, "source");
    raw.range[i] = fetch(named.range, "range");
    raw.inverse[i] = fetch(named.inverse, "inverse");
  }
  for (const auto& t : named.compose)
    raw.compose.push_back({resolve(t[0]), resolve(t[1]), resolve(t[2])});
  if (!result.violations.empty()) return result;
  return validate_groupoid(raw);
}

/// Unwraps a validation result; intended for in-code constructions that are
/// correct by construction.
inline GroupoidPtr require_valid(GroupoidValidation v, const char* what) {
  if (!v.ok()) {
    std::string msg = std::string(what) + " produced an invalid groupoid:";
    for (const auto& s : v.violations) msg += "\n  " + s;
    throw std::logic_error(msg);
  }
  return v.groupoid;
}

/// True iff source and range are both injective on S.
inline bool is_bisection(const FiniteGroupoid& G, const ArrowSet& S) {
  std::vector<std::uint8_t> src_seen(G.size(), 0), rng_seen(G.size(), 0);
  for (int g : S.indices()) {
    if (src_seen[G.source(g)]++ || rng_seen[G.range(g)]++) return false;
  }
  return true;
}

/// Greedy partition of S into disjoint bisections: arrows are scanned in
/// canonical order and placed into the first class whose source and range
/// sets they do not collide with; a collision starts a new class.
inline std::vector<ArrowSet> cover_by_bisections(const FiniteGroupoid& G, const ArrowSet& S) {
  std::vector<ArrowSet> classes;
  std::vector<std::vector<std::uint8_t>> src, rng;
  for (int g : S.indices()) {
    bool placed = false;
    for (std::size_t k = 0; k < classes.size() && !placed; ++k) {
      if (!src[k][G.source(g)] && !rng[k][G.range(g)]) {
        classes[k].insert(g);
        src[k][G.source(g)] = 1;
        rng[k][G.range(g)] = 1;
        placed = true;
      }
    }
    if (!placed) {
      classes.emplace_back(G.size());
      classes.back().insert(g);
      src.emplace_back(G.size(), 0);
      rng.emplace_back(G.size(), 0);
      src.back()[G.source(g)] = 1;
      rng.back()[G.range(g)] = 1;
    }
  }
  return classes;
}

/// Iso(x) = {γ : source(γ) = range(γ) = x}.
inline ArrowSet isotropy(const FiniteGroupoid& G, int x) {
  if (!G.is_unit(x)) throw std::invalid_argument("isotropy: not a unit arrow");
  ArrowSet s(G.size());
  for (int g = 0; g < G.size(); ++g)
    if (G.source(g) == x && G.range(g) == x) s.insert(g);
  return s;
}

/// Every isotropy group is trivial. For finite discrete groupoids this is
/// the same as topologically principal.
inline bool is_principal(const FiniteGroupoid& G) {
  for (int x : G.units()) {
    if (isotropy(G, x).size() != 1) return false;
  }
  return true;
}

/// Orbit partition of the unit space under "joined by an arrow".
/// Returns one ascending list of units per orbit, ordered by smallest member.
inline std::vector<std::vector<int>> unit_orbits(const FiniteGroupoid& G) {
  std::vector<int> parent(G.size());
  for (int i = 0; i < G.size(); ++i) parent[i] = i;
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int g = 0; g < G.size(); ++g) {
    int a = find(G.source(g)), b = find(G.range(g));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<int>> orbits;
  std::unordered_map<int, int> orbit_of_root;
  for (int x : G.units()) {
    int r = find(x);
    auto it = orbit_of_root.find(r);
    if (it == orbit_of_root.end()) {
      orbit_of_root[r] = static_cast<int>(orbits.size());
      orbits.push_back({x});
    } else {
      orbits[it->second].push_back(x);
    }
  }
  return orbits;
}

/// All invariant subsets of the unit space, i.e. all unions of orbits,
/// enumerated in binary-counter order over the orbit list.
inline std::vector<ArrowSet> invariant_subsets(const FiniteGroupoid& G) {
  auto orbits = unit_orbits(G);
  if (orbits.size() > 20) throw CapExceeded("invariant_subsets: more than 2^20 subsets");
  const std::size_t k = orbits.size();
  std::vector<ArrowSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    ArrowSet s(G.size());
    for (std::size_t j = 0; j < k; ++j)
      if (mask & (std::uint64_t{1} << j))
        for (int x : orbits[j]) s.insert(x);
    out.push_back(std::move(s));
  }
  return out;
}

/// True iff F is a set of units with s(γ)∈F ⟺ r(γ)∈F for every arrow.
inline bool is_invariant_unit_set(const FiniteGroupoid& G, const ArrowSet& F) {
  for (int x : F.indices())
    if (!G.is_unit(x)) return false;
  for (int g = 0; g < G.size(); ++g)
    if (F.contains(G.source(g)) != F.contains(G.range(g))) return false;
  return true;
}

/// Restriction G|_F = {γ : s(γ) ∈ F and r(γ) ∈ F} for invariant F.
/// Arrow names are preserved.
inline GroupoidPtr restrict(const FiniteGroupoid& G, const ArrowSet& F) {
  if (!is_invariant_unit_set(G, F))
    throw std::invalid_argument("restrict: F is not an invariant set of units");
  std::vector<int> keep;
  std::vector<int> new_id(G.size(), -1);
  for (int g = 0; g < G.size(); ++g) {
    if (F.contains(G.source(g)) && F.contains(G.range(g))) {
      new_id[g] = static_cast<int>(keep.size());
      keep.push_back(g);
    }
  }
  RawGroupoid raw;
  for (int g : keep) {
    raw.names.push_back(G.name(g));
    raw.source.push_back(new_id[G.source(g)]);
    raw.range.push_back(new_id[G.range(g)]);
    raw.inverse.push_back(new_id[G.inverse(g)]);
  }
  for (int g : keep)
    for (int h : keep)
      if (G.composable(g, h))
        raw.compose.push_back({new_id[g], new_id[h], new_id[G.compose(g, h)]});
  return require_valid(validate_groupoid(raw), "restrict");
}

/// Arrow set of the restriction, as a subset of the ambient groupoid.
inline ArrowSet restriction_arrows(const FiniteGroupoid& G, const ArrowSet& F) {
  ArrowSet s(G.size());
  for (int g = 0; g < G.size(); ++g)
    if (F.contains(G.source(g)) && F.contains(G.range(g))) s.insert(g);
  return s;
}

/// Disjoint union; the two arrow sets are kept apart by "1:"/"2:" prefixes
/// and there is no cross composition.
inline GroupoidPtr disjoint_union(const FiniteGroupoid& G1, const FiniteGroupoid& G2) {
  RawGroupoid raw;
  const int n1 = G1.size();
  for (int g = 0; g < n1; ++g) {
    raw.names.push_back("1:" + G1.name(g));
    raw.source.push_back(G1.source(g));
    raw.range.push_back(G1.range(g));
    raw.inverse.push_back(G1.inverse(g));
  }
  for (int g = 0; g < G2.size(); ++g) {
    raw.names.push_back("2:" + G2.name(g));
    raw.source.push_back(n1 + G2.source(g));
    raw.range.push_back(n1 + G2.range(g));
    raw.inverse.push_back(n1 + G2.inverse(g));
  }
  for (int g = 0; g < n1; ++g)
    for (int h = 0; h < n1; ++h)
      if (G1.composable(g, h)) raw.compose.push_back({g, h, G1.compose(g, h)});
  for (int g = 0; g < G2.size(); ++g)
    for (int h = 0; h < G2.size(); ++h)
      if (G2.composable(g, h))
        raw.compose.push_back({n1 + g, n1 + h, n1 + G2.compose(g, h)});
  return require_valid(validate_groupoid(raw), "disjoint_union");
}

/// Groupoid of units only: one point per name, no other arrows.
inline GroupoidPtr trivial_groupoid(const std::vector<std::string>& points) {
  RawGroupoid raw;
  raw.names = points;
  const int n = static_cast<int>(points.size());
  for (int i = 0; i < n; ++i) {
    raw.source.push_back(i);
    raw.range.push_back(i);
    raw.inverse.push_back(i);
    raw.compose.push_back({i, i, i});
  }
  return require_valid(validate_groupoid(raw), "trivial_groupoid");
}

/// Full equivalence relation on a point set: one arrow per ordered pair,
/// the pair (a, b) running from b to a. Units come first in canonical
/// order, then the off-diagonal pairs lexicographically.
inline GroupoidPtr full_relation_groupoid(const std::vector<std::string>& points) {
  const int m = static_cast<int>(points.size());
  RawGroupoid raw;
  std::vector<std::vector<int>> id(m, std::vector<int>(m, -1));
  for (int i = 0; i < m; ++i) {
    id[i][i] = static_cast<int>(raw.names.size());
    raw.names.push_back(points[i]);
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      id[i][j] = static_cast<int>(raw.names.size());
      raw.names.push_back(points[i] + "<-" + points[j]);
    }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      raw.source.push_back(id[j][j]);
      raw.range.push_back(id[i][i]);
      raw.inverse.push_back(id[j][i]);
    }
  // Order the tables by arrow id, not by (i, j).
  {
    std::vector<int> src(raw.names.size()), rng(raw.names.size()), inv(raw.names.size());
    int k = 0;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        src[id[i][j]] = raw.source[k];
        rng[id[i][j]] = raw.range[k];
        inv[id[i][j]] = raw.inverse[k];
        ++k;
      }
    raw.source = src;
    raw.range = rng;
    raw.inverse = inv;
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) raw.compose.push_back({id[i][j], id[j][k], id[i][k]});
  return require_valid(validate_groupoid(raw), "full_relation_groupoid");
}

/// True iff S is closed under inverse and composition and contains the
/// source and range of each member.
inline bool is_subgroupoid(const FiniteGroupoid& G, const ArrowSet& S) {
  for (int g : S.indices()) {
    if (!S.contains(G.inverse(g))) return false;
    if (!S.contains(G.source(g)) || !S.contains(G.range(g))) return false;
    for (int h : S.indices())
      if (G.composable(g, h) && !S.contains(G.compose(g, h))) return false;
  }
  return true;
}

/// Brute-force enumeration of subgroupoids (2^n subsets, filtered), in
/// ascending bitmask order. Guarded by the cap.
inline std::vector<ArrowSet> enumerate_subgroupoids(const FiniteGroupoid& G,
                                                    bool require_all_units,
                                                    int cap = 16) {
  if (G.size() > cap)
    throw CapExceeded("enumerate_subgroupoids: " + std::to_string(G.size()) +
                      " arrows exceeds cap " + std::to_string(cap));
  const int n = G.size();
  std::vector<ArrowSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ArrowSet s(n);
    for (int i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) s.insert(i);
    if (require_all_units) {
      bool all = true;
      for (int u : G.units())
        if (!s.contains(u)) { all = false; break; }
      if (!all) continue;
    }
    if (is_subgroupoid(G, s)) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace glab

#endif  // GLAB_GROUPOID_HPP
