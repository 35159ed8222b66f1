#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "osp/exact.hpp"
#include "osp/letters.hpp"
#include "osp/rep_theory.hpp"

namespace osp {

/// The standard (possibly degenerate) skew form on C^N in the basis e_first..e_last:
/// ω(e_i, e_{2n+1-i}) = 1 for unbarred i, and e_0 spans the kernel when N is odd.
class OddSymplecticForm {
 public:
  explicit OddSymplecticForm(int N);

  int dimension() const { return space_.dimension(); }
  const LetterSpace& letters() const { return space_; }
  /// ω on basis vectors indexed 0..N-1 (index = letter - first letter).
  int operator()(int a, int b) const { return space_.pairing(a + space_.first, b + space_.first); }
  ExactMatrix gram() const;

 private:
  LetterSpace space_;
};

/// A tensor in V^{⊗d} stored sparsely; keys are base-N codes with the first
/// tensor factor as the most significant digit.
using SparseTensor = std::map<std::uint32_t, BigInt>;

inline constexpr int kMaxTensorDegree = 4;
inline constexpr int kMaxTensorDimension = 7;

/// Matrix of the contraction φ_pq: V^{⊗d} -> V^{⊗(d-2)} (1-based p < q), which
/// pairs factors p and q with ω and keeps the rest in order.
ExactMatrix contraction_matrix(int p, int q, int d, const OddSymplecticForm& form);

/// Young symmetrizer of the row-filled tableau of λ: signed column sum after row sum.
SparseTensor apply_young_symmetrizer(const Partition& lambda, int N, const SparseTensor& tensor);

/// Basis of S_λ V ⊂ V^{⊗d}, the image of the Young symmetrizer on all basis tensors.
/// Each vector is integral and primitive. Caps: |λ| <= 4, N <= 7.
std::vector<SparseTensor> schur_subspace(const Partition& lambda, int N);

/// dim of S_λ V intersected with the kernels of all contractions φ_pq.
/// Each torus weight space is reduced separately; the symmetrizer and the
/// contractions both preserve weights, so the intersection splits accordingly.
std::size_t trace_free_schur_dim(const Partition& lambda, int N);

}  // namespace osp
