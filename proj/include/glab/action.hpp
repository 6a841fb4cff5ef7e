#ifndef GLAB_ACTION_HPP
#define GLAB_ACTION_HPP

#include <string>
#include <vector>

#include "glab/groupoid.hpp"

namespace glab {

/// Finite group given by its Cayley table: mult[i][j] is the index of the
/// product of elements i and j.
struct GroupTable {
  std::vector<std::string> elements;
  std::vector<std::vector<int>> mult;

  int size() const { return static_cast<int>(elements.size()); }
};

/// Left action of a finite group on a finite set: act[g][x] is the image
/// point of x under element g.
struct GroupAction {
  GroupTable group;
  std::vector<std::string> space;
  std::vector<std::vector<int>> act;
};

inline std::vector<std::string> validate_group_table(const GroupTable& t) {
  std::vector<std::string> bad;
  const int n = t.size();
  if (n == 0) {
    bad.push_back("group has no elements");
    return bad;
  }
  if (static_cast<int>(t.mult.size()) != n) {
    bad.push_back("cayley table has wrong number of rows");
    return bad;
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(t.mult[i].size()) != n) {
      bad.push_back("cayley table row " + std::to_string(i) + " has wrong length");
      return bad;
    }
    for (int j = 0; j < n; ++j)
      if (t.mult[i][j] < 0 || t.mult[i][j] >= n) {
        bad.push_back("cayley entry out of range at (" + std::to_string(i) + "," +
                      std::to_string(j) + ")");
        return bad;
      }
  }
  // Latin square.
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint8_t> row(n, 0), col(n, 0);
    for (int j = 0; j < n; ++j) {
      if (row[t.mult[i][j]]++) bad.push_back("row " + std::to_string(i) + " repeats a product");
      if (col[t.mult[j][i]]++) bad.push_back("column " + std::to_string(i) + " repeats a product");
    }
  }
  // Two-sided identity.
  int e = -1;
  for (int i = 0; i < n && e < 0; ++i) {
    bool id = true;
    for (int j = 0; j < n; ++j)
      if (t.mult[i][j] != j || t.mult[j][i] != j) { id = false; break; }
    if (id) e = i;
  }
  if (e < 0) bad.push_back("group has no identity element");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (t.mult[t.mult[i][j]][k] != t.mult[i][t.mult[j][k]]) {
          bad.push_back("cayley table is not associative");
          return bad;
        }
  return bad;
}

inline int group_identity(const GroupTable& t) {
  for (int i = 0; i < t.size(); ++i) {
    bool id = true;
    for (int j = 0; j < t.size(); ++j)
      if (t.mult[i][j] != j || t.mult[j][i] != j) { id = false; break; }
    if (id) return i;
  }
  throw std::invalid_argument("group table has no identity");
}

inline int group_inverse(const GroupTable& t, int g) {
  const int e = group_identity(t);
  for (int h = 0; h < t.size(); ++h)
    if (t.mult[g][h] == e && t.mult[h][g] == e) return h;
  throw std::invalid_argument("group element has no inverse");
}

inline std::vector<std::string> validate_action(const GroupAction& a) {
  std::vector<std::string> bad = validate_group_table(a.group);
  if (!bad.empty()) return bad;
  const int n = a.group.size();
  const int m = static_cast<int>(a.space.size());
  if (m == 0) bad.push_back("action space is empty");
  if (static_cast<int>(a.act.size()) != n) {
    bad.push_back("act table has wrong number of rows");
    return bad;
  }
  for (int g = 0; g < n; ++g) {
    if (static_cast<int>(a.act[g].size()) != m) {
      bad.push_back("act row for element " + a.group.elements[g] + " has wrong length");
      return bad;
    }
    for (int x = 0; x < m; ++x)
      if (a.act[g][x] < 0 || a.act[g][x] >= m) {
        bad.push_back("act entry out of range");
        return bad;
      }
  }
  const int e = group_identity(a.group);
  for (int x = 0; x < m; ++x)
    if (a.act[e][x] != x) bad.push_back("identity does not act trivially");
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int x = 0; x < m; ++x)
        if (a.act[g][a.act[h][x]] != a.act[a.group.mult[g][h]][x]) {
          bad.push_back("action is not compatible with the group product");
          return bad;
        }
  return bad;
}

/// Cyclic group of order k. Order 2 uses the traditional {e, a} names.
inline GroupTable cyclic_group_table(int k) {
  if (k <= 0) throw std::invalid_argument("cyclic_group_table: order must be positive");
  GroupTable t;
  if (k == 2) {
    t.elements = {"e", "a"};
  } else {
    t.elements.push_back("e");
    for (int i = 1; i < k; ++i) t.elements.push_back(i == 1 ? "g" : "g" + std::to_string(i));
  }
  t.mult.assign(k, std::vector<int>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) t.mult[i][j] = (i + j) % k;
  return t;
}

/// A group viewed as a groupoid with a single unit. Arrow names are the
/// element names; index layout follows the element order.
struct GroupGroupoid {
  GroupoidPtr G;
  GroupTable table;
  // arrow id == element index by construction
};

inline GroupGroupoid group_groupoid(const GroupTable& t) {
  auto bad = validate_group_table(t);
  if (!bad.empty()) throw std::invalid_argument("group_groupoid: " + bad.front());
  const int e = group_identity(t);
  RawGroupoid raw;
  raw.names = t.elements;
  for (int g = 0; g < t.size(); ++g) {
    raw.source.push_back(e);
    raw.range.push_back(e);
    raw.inverse.push_back(group_inverse(t, g));
  }
  for (int g = 0; g < t.size(); ++g)
    for (int h = 0; h < t.size(); ++h) raw.compose.push_back({g, h, t.mult[g][h]});
  return GroupGroupoid{require_valid(validate_groupoid(raw), "group_groupoid"), t};
}

/// Transformation groupoid Γ⋉X for an action: arrows are the pairs (γ, x)
/// with s(γ,x) = x, r(γ,x) = γx, (γ₁, γ₂x)(γ₂, x) = (γ₁γ₂, x) and
/// (γ,x)⁻¹ = (γ⁻¹, γx). Arrows are ordered with the group index outermost.
struct TransformationGroupoid {
  GroupoidPtr G;
  GroupAction action;
  std::vector<std::vector<int>> arrow;  // arrow[g][x] -> arrow id

  int group_of(int arrow_id) const { return arrow_id / static_cast<int>(action.space.size()); }
  int point_of(int arrow_id) const { return arrow_id % static_cast<int>(action.space.size()); }
};

inline TransformationGroupoid transformation_groupoid(const GroupAction& a) {
  auto bad = validate_action(a);
  if (!bad.empty()) throw std::invalid_argument("transformation_groupoid: " + bad.front());
  const int n = a.group.size();
  const int m = static_cast<int>(a.space.size());
  const int e = group_identity(a.group);

  TransformationGroupoid result;
  result.action = a;
  result.arrow.assign(n, std::vector<int>(m, -1));

  RawGroupoid raw;
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < m; ++x) {
      result.arrow[g][x] = static_cast<int>(raw.names.size());
      raw.names.push_back(a.group.elements[g] + "|" + a.space[x]);
    }
  auto id = [&](int g, int x) { return result.arrow[g][x]; };
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < m; ++x) {
      raw.source.push_back(id(e, x));
      raw.range.push_back(id(e, a.act[g][x]));
      raw.inverse.push_back(id(group_inverse(a.group, g), a.act[g][x]));
    }
  // (g1, g2·x)(g2, x) = (g1 g2, x): composable iff the first arrow sits at
  // the image point of the second.
  for (int g1 = 0; g1 < n; ++g1)
    for (int g2 = 0; g2 < n; ++g2)
      for (int x = 0; x < m; ++x)
        raw.compose.push_back({id(g1, a.act[g2][x]), id(g2, x), id(a.group.mult[g1][g2], x)});
  result.G = require_valid(validate_groupoid(raw), "transformation_groupoid");
  return result;
}

}  // namespace glab

#endif  // GLAB_ACTION_HPP
