#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "osp/combinatorics.hpp"

namespace osp {

enum class EntryState { One, Zero, Free, Determined };

/// Normal form of the row-echelon matrices generating the points of a
/// Schubert cell. Rows follow the pivot list; column c holds letter
/// space.first + c.
///
/// State rules, highest precedence first: the pivot is `One`; entries right
/// of a pivot are `Zero`; entries below a pivot are `Zero`; entries below the
/// position opposed to a pivot are `Determined` by isotropy; the rest are `Free`.
struct EchelonPattern {
  LetterSpace space;
  std::vector<int> pivots;
  std::vector<std::vector<EntryState>> grid;

  int rows() const { return static_cast<int>(grid.size()); }
  int cols() const { return space.dimension(); }
  int count(EntryState state) const;
  /// One line per row: '1', '0', '*' (free), '.' (determined).
  std::string render() const;
};

/// Throws std::invalid_argument for duplicate, opposed or out-of-range pivots.
EchelonPattern echelon_pattern(const std::vector<int>& pivots, const LetterSpace& space);

/// Polynomial in q with nonnegative integer coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::uint64_t> coefficients);
  /// 1 + q + ... + q^(m-1).
  static IntPolynomial q_integer(int m);

  void add_monomial(int degree, std::uint64_t coefficient = 1);
  const std::vector<std::uint64_t>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::uint64_t at_one() const;
  bool is_palindromic() const;
  std::string to_string() const;

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<std::uint64_t> coeffs_;
};

enum class Manifold { Grassmannian, Flag };

/// G_ω(k, N) or F_ω(N) for N = 2n or 2n+1.
struct Ambient {
  Manifold kind = Manifold::Flag;
  int N = 2;
  int k = 0;

  static Ambient grassmannian(int k, int N);
  static Ambient flag(int N);

  bool odd() const { return N % 2 == 1; }
  int n() const { return odd() ? (N - 1) / 2 : N / 2; }
  LetterSpace letters() const { return LetterSpace::from_dimension(N); }
  std::string to_string() const;
};

using CellLabel = std::variant<AdmissibleIndex, SignedPermutation>;

std::string to_string(const CellLabel& label);

/// Cell labels of an ambient: admissible indices or signed permutations.
std::vector<CellLabel> cells(const Ambient& ambient);

/// Pivot list of a label in its ambient: the index, or the window in row order.
std::vector<int> pivots_of(const CellLabel& label);
/// Letter space whose columns carry the echelon matrices of `label`.
LetterSpace columns_of(const CellLabel& label);

/// Number of free entries in the echelon pattern of the cell.
int cell_dimension(const CellLabel& label);

/// Closed-form dimension of the ambient variety.
int ambient_dimension(const Ambient& ambient);

/// Sum of q^dim over the cells, by enumeration.
IntPolynomial poincare_polynomial(const Ambient& ambient);

/// (q^{n+1}-1)(q^{2n}-1)(q^{2n-2}-1)...(q^2-1) / (q-1)^{n+1} as a product of q-integers.
IntPolynomial odd_flag_poincare_closed_form(int n);

/// The unique codimension-one cell of G_ω(k, 2n+1), 1 <= k <= n+1.
AdmissibleIndex schubert_divisor(int k, int N);

/// Index of the Schubert variety {V ⊂ C^{2n+1}} inside G_ω(k, 2n+2), written in
/// the letters 0..2n+1 of the extended space.
AdmissibleIndex ambient_hyperplane_index(int k, int n);
/// {I in admissible_indices(k, extended(n)) : I <= ambient_hyperplane_index(k, n)}.
std::vector<AdmissibleIndex> hyperplane_interval(int k, int n);

/// C_I ⊂ X_J (resp. C_w ⊂ X_v). Throws on mismatched ambients.
bool variety_contains(const AdmissibleIndex& cell, const AdmissibleIndex& variety);
bool variety_contains(const SignedPermutation& cell, const SignedPermutation& variety);

/// dim(V_subspace ∩ E_level) = bound (cells) or >= bound (Schubert varieties).
/// E_level is spanned by the basis letters up to and including `level`.
struct IncidenceCondition {
  int subspace = 0;
  int level = 0;
  int bound = 0;
  bool exact = true;

  std::string to_string() const;
  friend bool operator==(const IncidenceCondition&, const IncidenceCondition&) = default;
};

std::vector<IncidenceCondition> incidence_conditions(const CellLabel& label, bool closure);

}  // namespace osp
