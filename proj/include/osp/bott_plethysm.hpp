#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "osp/rep_theory.hpp"

namespace osp {

/// Frobenius notation (a_1 > ... > a_r | b_1 > ... > b_r) of a partition:
/// arms and legs of the diagonal hooks.
struct FrobeniusHook {
  std::vector<int> arms;
  std::vector<int> legs;

  /// Throws unless arms and legs are strictly decreasing, nonnegative, of equal length.
  void validate() const;
  int rank() const { return static_cast<int>(arms.size()); }
  Partition to_partition() const;
  static FrobeniusHook from_partition(const Partition& lambda);
  std::string to_string() const;
};

/// The partition with Frobenius hooks (λ_1-1, ..., λ_l-1 | λ_1, ..., λ_l) for
/// strictly decreasing λ. Throws std::invalid_argument otherwise.
Partition lambda_minus(const Partition& strict);

/// Components S_{λ⁻} of Λ^j(Λ²C^rank): λ⁻ over strict partitions λ of j with at most
/// `rank` parts in λ⁻, in the order of decreasing λ.
std::vector<Partition> plethysm_wedge2(int j, int rank);

/// Weight on G(k, m) for the homogeneous bundle S_{first block} Q ⊗ S_{last block} T.
/// Must be non-increasing on the first m-k and on the last k entries.
struct BottWeight {
  std::vector<int> entries;
  int k = 0;

  int m() const { return static_cast<int>(entries.size()); }
  /// Throws std::invalid_argument unless the weight is dominant for the parabolic.
  void validate() const;
};

struct BottResult {
  bool vanishes = true;
  int degree = 0;
  std::vector<int> weight;
  BigInt dimension = 0;
};

/// Adds ρ = (m, ..., 1); repeated entries mean all cohomology vanishes. Otherwise
/// the only nonzero group sits in degree = #inversions of the sorting permutation,
/// with GL_m weight sorted(η+ρ) - ρ.
BottResult bott_cohomology(const BottWeight& eta);

struct KoszulComponent {
  Partition shape;  // λ⁻
  BottWeight eta;
  BottResult cohomology;
};

struct KoszulTerm {
  int j = 0;
  std::vector<KoszulComponent> components;
  BigInt h0 = 0;
};

struct KoszulReport {
  int k = 0;
  int n = 0;
  std::vector<KoszulTerm> terms;
  /// No component has cohomology in positive degree.
  bool acyclic = true;
  /// Every component with j >= 2 has no cohomology at all.
  bool higher_terms_vanish = true;
  /// H⁰ of the j = 0 term minus H⁰ of the j = 1 term.
  BigInt euler_difference = 0;
};

/// Bott's theorem on every term Λ^j(Λ²T) ⊗ det T* of the Koszul complex on
/// G(k, 2n+1), 2 <= k <= n <= 5.
KoszulReport koszul_acyclicity_check(int k, int n);

/// dim Λ^<k> C^{2n+1} = C(2n+1, k) - C(2n+1, k-2), 1 <= k <= n+1.
BigInt plucker_h0(int k, int n);

struct FanoReport {
  int k = 0;
  int n = 0;
  int components = 1;
  int dim_first = 0;
  std::optional<int> dim_second;
  std::uint64_t rank_h_first = 0;
  std::optional<std::uint64_t> rank_h_second;
  /// False only at (k, n) = (3, 3), where the ranks are independently pinned.
  bool extrapolated = true;
};

/// Dimensions and cohomology ranks of the components of the Fano scheme of
/// maximal linear spaces on the odd symplectic grassmannian. 2 <= k <= n.
FanoReport fano_report(int k, int n);

}  // namespace osp
