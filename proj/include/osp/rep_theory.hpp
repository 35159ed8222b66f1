#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "osp/exact.hpp"

namespace osp {

/// Weakly decreasing sequence of positive integers; trailing zeros are dropped.
class Partition {
 public:
  Partition() = default;
  /// Accepts trailing zeros; throws std::invalid_argument on negative or increasing parts.
  explicit Partition(std::vector<int> parts);
  /// "2,1,1", "(2,1,1)", "" or "0" for the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  /// Part i (0-based), zero beyond the length.
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }
  /// Parts padded with zeros to exactly `size` entries; throws if longer.
  std::vector<int> padded(int size) const;
  Partition conjugate() const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Weyl dimension of the GL_m-module with the given non-increasing integer
/// highest weight (entries may be negative). Throws if the weight is not dominant.
BigInt dim_gl_weight(std::span<const int> weight);
/// dim S_λ C^m; zero when the partition has more than m parts.
BigInt dim_gl(const Partition& lambda, int m);

/// Dimension of the irreducible Sp_2n-module of highest weight ν; zero if ℓ(ν) > n.
BigInt dim_sp(const Partition& nu, int n);

/// All ν with ℓ(ν) <= n interleaving λ: λ_1 >= ν_1 >= λ_2 >= ... >= ν_n >= λ_{n+1}.
/// Lexicographically decreasing. Throws if ℓ(λ) > n+1.
std::vector<Partition> interleavings(const Partition& lambda, int n);

/// dim of the trace-free Schur module S^<λ> C^{2n+1}: the sum of dim_sp(ν, n) over
/// the interleavings of λ, and zero when ℓ(λ) > n+1.
BigInt dim_odd(const Partition& lambda, int n);

struct FiltrationFactor {
  Partition inner;
  /// Coefficient of the last fundamental direction in the factor's weight: -(|λ| - |μ|).
  int shift = 0;
  friend bool operator==(const FiltrationFactor&, const FiltrationFactor&) = default;
};

/// Patterns μ with λ_1 >= μ_1 >= λ_2 >= ... >= λ_{n+1} >= μ_{n+1} >= 0, lexicographically
/// decreasing. Throws if ℓ(λ) > n+1.
std::vector<FiltrationFactor> shtepin_factors(const Partition& lambda, int n);

/// Σ dim_odd(μ, n) over the filtration factors against dim_sp(λ, n+1).
struct FiltrationCheck {
  BigInt factor_sum;
  BigInt restricted_dimension;
  bool holds() const { return factor_sum == restricted_dimension; }
};
FiltrationCheck filtration_dimension_check(const Partition& lambda, int n);

/// Sections of the line bundle L_λ on the isotropic flag manifold of C^N.
/// Throws if ℓ(λ) exceeds the number of tautological steps.
BigInt h0_line_bundle(const Partition& lambda, int N);

struct LieDimensions {
  std::size_t even = 0;
  std::size_t odd = 0;
  /// Order of the center of the odd symplectic group; a known constant, not computed.
  int center_order = 2;
};

/// Solves tX J + J X = 0 by exact elimination for the standard form on C^{2n}
/// and for its degenerate extension to C^{2n+1}. Requires 1 <= n <= 4.
LieDimensions lie_dimension_check(int n);

}  // namespace osp
