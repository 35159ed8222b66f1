#pragma once

#include <string>
#include <vector>

#include "osp/schubert.hpp"

namespace osp {

/// Numeric and combinatorial data of one orbit of the odd symplectic group.
struct OrbitInfo {
  std::string id;
  int dimension = 0;
  int codimension = 0;
  std::string model;
  /// Ids of the orbits contained in the closure, including this one.
  std::vector<std::string> closure;
};

/// Orbits on G_ω(k, 2n+1), 1 <= k <= n+1. For k <= n: the closed orbit X_0
/// (subspaces through the kernel line) and the open orbit X_1. For k = n+1 the
/// action is transitive and a single orbit X is returned.
std::vector<OrbitInfo> grassmannian_orbits(int k, int n);

/// Orbits O_1, ..., O_{n+1} on F_ω(2n+1); O_i holds the flags whose
/// i-th subspace is the first one containing the kernel line.
std::vector<OrbitInfo> flag_orbits(int n);

/// Orbit containing a Schubert cell of an odd ambient. Throws
/// std::invalid_argument for even ambients.
std::string cell_orbit(const CellLabel& label);

}  // namespace osp
