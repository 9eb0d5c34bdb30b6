#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "lienil/nilpotent_algebra.hpp"
#include "lienil/root_system.hpp"

namespace lienil {

/// Integer structure constants N(a, b) on pairs of positive roots, indexed by
/// position in the root ordering; 0 when a + b is not a root.
class ChevalleyConstants {
 public:
  explicit ChevalleyConstants(const RootSystem& rs);

  int operator()(std::size_t a, std::size_t b) const { return table_[a * n_ + b]; }
  /// The extraspecial pair of a non-simple root, or nothing for simple roots.
  std::optional<std::pair<std::size_t, std::size_t>> extraspecial_pair(std::size_t root) const;

 private:
  std::size_t n_;
  std::vector<int> table_;
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> extraspecial_;
};

/// n = sum of the positive root spaces, one basis vector per positive root in
/// the root ordering, with [x_a, x_b] = N(a, b) x_(a+b).
NilpotentAlgebra nilradical(const RootSystem& rs);

struct JacobiReport {
  bool passed = true;
  /// Violating basis triples (i < j < k), capped at `limit` entries.
  std::vector<std::array<std::size_t, 3>> violations;
};

/// Checks [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 on all basis triples.
JacobiReport verify_jacobi(const NilpotentAlgebra& a, std::size_t limit = 16);

}  // namespace lienil
