#ifndef GLAB_TESTS_BUNDLED_HPP
#define GLAB_TESTS_BUNDLED_HPP

#include <string>
#include <utility>
#include <vector>

#include "glab/action.hpp"
#include "glab/groupoid.hpp"

namespace glab::bundled {

inline GroupoidPtr r2() { return full_relation_groupoid({"p", "q"}); }

inline GroupoidPtr z2() { return group_groupoid(cyclic_group_table(2)).G; }

inline GroupoidPtr z3() { return group_groupoid(cyclic_group_table(3)).G; }

inline GroupoidPtr z2_z3() { return disjoint_union(*z2(), *z3()); }

inline GroupAction z2_swap_action() {
  GroupAction a;
  a.group = cyclic_group_table(2);
  a.space = {"p", "q"};
  a.act = {{0, 1}, {1, 0}};
  return a;
}

inline TransformationGroupoid z2_swap() { return transformation_groupoid(z2_swap_action()); }

/// Symmetric group on three letters, acting naturally on three points.
/// Elements: e, a=(01), b=(02), c=(12), r=(012), s=(021).
inline GroupTable s3_table() {
  GroupTable t;
  t.elements = {"e", "a", "b", "c", "r", "s"};
  t.mult = {
      {0, 1, 2, 3, 4, 5},
      {1, 0, 5, 4, 3, 2},
      {2, 4, 0, 5, 1, 3},
      {3, 5, 4, 0, 2, 1},
      {4, 2, 3, 1, 5, 0},
      {5, 3, 1, 2, 0, 4},
  };
  return t;
}

inline GroupAction s3_action() {
  GroupAction a;
  a.group = s3_table();
  a.space = {"x0", "x1", "x2"};
  a.act = {
      {0, 1, 2},  // e
      {1, 0, 2},  // (01)
      {2, 1, 0},  // (02)
      {0, 2, 1},  // (12)
      {1, 2, 0},  // (012)
      {2, 0, 1},  // (021)
  };
  return a;
}

inline TransformationGroupoid s3_points() { return transformation_groupoid(s3_action()); }

inline std::vector<std::pair<std::string, GroupoidPtr>> all() {
  return {
      {"r2", r2()},
      {"z2", z2()},
      {"z3", z3()},
      {"z2_z3", z2_z3()},
      {"z2_swap", z2_swap().G},
      {"s3_points", s3_points().G},
  };
}

}  // namespace glab::bundled

#endif  // GLAB_TESTS_BUNDLED_HPP
