#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "osp/letters.hpp"

namespace osp {

/// An element of the hyperoctahedral group W(C_m), stored by its window of
/// natural-order letters.
///
/// Even family: W(C_n), positions 1..n, letters 1..2n.
/// Odd family: W(C_{n+1}) written over letters 0..2n+1 with positions 0..n.
/// The cells of the odd flag manifold are the odd-family elements whose window
/// avoids the letter 0b (= 2n+1); other odd-family elements are representable
/// because the ambient group needs them (chains, interval tests).
class SignedPermutation {
 public:
  /// Throws std::invalid_argument unless the window is a signed permutation.
  SignedPermutation(Family family, int n, std::vector<int> window);

  static SignedPermutation identity(Family family, int n);
  /// Parses a comma separated window in bar notation, e.g. "1b,2".
  static SignedPermutation parse(Family family, int n, std::string_view text);

  Family family() const { return family_; }
  int n() const { return n_; }
  /// Rank m of the ambient W(C_m): n or n+1.
  int rank() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }
  LetterSpace letters() const;
  int first_position() const { return family_ == Family::Even ? 1 : 0; }
  /// Value at a position in first_position()..first_position()+rank()-1.
  int at(int position) const;

  /// The induced permutation of all 2m letters, indexed by letter - first.
  std::vector<int> full_permutation() const;
  /// True iff the window does not contain 0b (always true for the even family).
  bool avoids_zero_bar() const;

  std::string to_string() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend std::strong_ordering operator<=>(const SignedPermutation& a, const SignedPermutation& b);

 private:
  Family family_;
  int n_;
  std::vector<int> window_;
};

/// Strictly increasing multi-index of letters with at most one letter from each
/// opposed pair. Labels Schubert cells of isotropic grassmannians.
class AdmissibleIndex {
 public:
  AdmissibleIndex(LetterSpace space, std::vector<int> entries);
  static AdmissibleIndex parse(LetterSpace space, std::string_view text);

  const LetterSpace& space() const { return space_; }
  int k() const { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const { return entries_; }
  bool contains(int letter) const;
  std::string to_string() const;

  friend bool operator==(const AdmissibleIndex&, const AdmissibleIndex&) = default;

 private:
  LetterSpace space_;
  std::vector<int> entries_;
};

/// Rank function of a signed permutation on its rectangle of positions × columns.
struct RankTable {
  int first_position = 1;
  int first_column = 1;
  std::vector<std::vector<int>> values;  // values[i - first_position][j - first_column]

  int operator()(int i, int j) const { return values.at(i - first_position).at(j - first_column); }
  friend bool operator==(const RankTable&, const RankTable&) = default;
};

/// All of W(C_n) in lexicographic window order.
std::vector<SignedPermutation> enumerate_weyl_even(int n);
/// The cell labels of the odd flag manifold: odd-family windows avoiding 0b.
std::vector<SignedPermutation> enumerate_weyl_odd(int n);
/// The whole ambient W(C_{n+1}) in odd-family lettering.
std::vector<SignedPermutation> enumerate_weyl_odd_ambient(int n);
/// 1b 2b ... nb 0, the top of the odd interval.
SignedPermutation odd_interval_top(int n);
/// The odd interval computed as {w in W(C_{n+1}) : w <= odd_interval_top(n)}.
std::vector<SignedPermutation> enumerate_weyl_odd_by_interval(int n);

/// Coxeter length, computed as (inv(ŵ) + #barred window letters) / 2.
int length(const SignedPermutation& w);

/// Sorted set of the first i window letters (1 <= i <= rank).
AdmissibleIndex flatten_prefix(const SignedPermutation& w, int i);

/// Bruhat order by the sorted-prefix criterion. Throws on family/rank mismatch.
bool bruhat_leq(const SignedPermutation& w, const SignedPermutation& v);

/// Bruhat order from its chain definition: breadth-first search through left
/// multiplication by reflections that raise the length by exactly one.
/// Limited to rank <= 5.
bool bruhat_leq_chain_oracle(const SignedPermutation& w, const SignedPermutation& v);

/// Reflections of W(C_m) as involutions of the 2m letters (indexed by letter - first).
std::vector<std::vector<int>> reflections(const LetterSpace& letters);

/// #{positions p <= i : w(p) <= j}. Rectangle: {1..n}×{1..2n} (even) or
/// {0..n}×{0..2n} (odd). Throws std::out_of_range outside it.
int rank_function(const SignedPermutation& w, int i, int j);
RankTable rank_table(const SignedPermutation& w);

/// All admissible indices of size k, lexicographic.
std::vector<AdmissibleIndex> admissible_indices(int k, const LetterSpace& space);
/// Same with the ambient given by its dimension N (2n or 2n+1).
std::vector<AdmissibleIndex> admissible_indices(int k, int N);
/// Closed-form cardinality of admissible_indices(k, space); k = 0 gives 1.
std::uint64_t admissible_count(int k, const LetterSpace& space);

/// Componentwise comparison. Throws on shape mismatch.
bool index_leq(const AdmissibleIndex& a, const AdmissibleIndex& b);

std::uint64_t binomial(int n, int k);
std::uint64_t factorial(int n);

}  // namespace osp
