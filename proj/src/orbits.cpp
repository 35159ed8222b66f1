#include "osp/orbits.hpp"

#include <algorithm>
#include <stdexcept>

namespace osp {

std::vector<OrbitInfo> grassmannian_orbits(int k, int n) {
  if (n < 1 || k < 1 || k > n + 1) throw std::invalid_argument("need n >= 1 and 1 <= k <= n+1");
  const int total = ambient_dimension(Ambient::grassmannian(k, 2 * n + 1));
  if (k == n + 1) {
    return {{"X", total, 0, "homogeneous; isomorphic to the Lagrangian grassmannian G_w(n,2n)", {"X"}}};
  }
  const int closed = k == 1 ? 0 : ambient_dimension(Ambient::grassmannian(k - 1, 2 * n));
  return {
      {"X_0", closed, total - closed,
       "closed orbit of subspaces containing the kernel line; isomorphic to G_w(" +
           std::to_string(k - 1) + "," + std::to_string(2 * n) + ")",
       {"X_0"}},
      {"X_1", total, 0,
       "open orbit; total space of the dual tautological bundle over G_w(" + std::to_string(k) +
           "," + std::to_string(2 * n) + ")",
       {"X_0", "X_1"}},
  };
}

std::vector<OrbitInfo> flag_orbits(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  std::vector<OrbitInfo> out;
  for (int i = 1; i <= n + 1; ++i) {
    OrbitInfo orbit;
    orbit.id = "O_" + std::to_string(i);
    orbit.dimension = n * n + i - 1;
    orbit.codimension = n + 1 - i;
    orbit.model = i == 1 ? "closed orbit; isomorphic to F_w(" + std::to_string(2 * n) + ")"
                         : "total space of the cotangent-type bundle T*_" + std::to_string(i - 1) +
                               " over F_w(" + std::to_string(2 * n) + ")";
    for (int j = 1; j <= i; ++j) orbit.closure.push_back("O_" + std::to_string(j));
    out.push_back(std::move(orbit));
  }
  return out;
}

std::string cell_orbit(const CellLabel& label) {
  if (const auto* index = std::get_if<AdmissibleIndex>(&label)) {
    const auto& space = index->space();
    if (space.first != 0 || space.last != 2 * space.n) {
      throw std::invalid_argument("orbit classification needs an odd ambient");
    }
    if (index->k() == space.n + 1) return "X";
    return index->contains(0) ? "X_0" : "X_1";
  }
  const auto& w = std::get<SignedPermutation>(label);
  if (w.family() == Family::Even) throw std::invalid_argument("orbit classification needs an odd ambient");
  columns_of(label);  // rejects windows containing 0b
  const auto& window = w.window();
  const auto at = std::find(window.begin(), window.end(), 0) - window.begin();
  return "O_" + std::to_string(at + 1);
}

}  // namespace osp
