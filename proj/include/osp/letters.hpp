#pragma once

#include <string>
#include <string_view>

namespace osp {

/// Which Weyl-group family a signed permutation belongs to: the symplectic
/// group W(C_n) acting on C^{2n}, or the interval of W(C_{n+1}) that labels
/// the Schubert cells of the odd symplectic flag manifold in C^{2n+1}.
enum class Family { Even, Odd };

/// A set of basis letters in natural order. The opposite of a letter i is
/// 2n+1-i in every ambient; in C^{2n+1} the letter 0 has no opposite.
///
///   even(n)      C^{2n}    letters 1..2n
///   odd(n)       C^{2n+1}  letters 0..2n
///   extended(n)  C^{2n+2}  letters 0..2n+1   (0 and 2n+1 are opposite)
struct LetterSpace {
  int n = 0;
  int first = 1;
  int last = 0;

  static LetterSpace even(int n);
  static LetterSpace odd(int n);
  static LetterSpace extended(int n);
  /// even(N/2) for even N, odd((N-1)/2) for odd N.
  static LetterSpace from_dimension(int N);

  int dimension() const { return last - first + 1; }
  bool contains(int letter) const { return letter >= first && letter <= last; }
  int opposite(int letter) const { return 2 * n + 1 - letter; }
  bool has_opposite(int letter) const { return contains(opposite(letter)); }
  /// Letters past the middle are written with a bar.
  bool barred(int letter) const { return letter > n; }
  /// Maximal isotropic dimension: n for C^{2n}, n+1 otherwise.
  int max_isotropic() const { return first == 1 ? n : n + 1; }
  /// ω(e_a, e_b): +1 if b is the opposite of a and a is unbarred, -1 if b is the
  /// opposite of a and a is barred, 0 otherwise. In odd(n) the letter 0 spans the kernel.
  int pairing(int a, int b) const {
    if (!contains(a) || !contains(b) || b != opposite(a)) return 0;
    return a <= n ? 1 : -1;
  }

  bool operator==(const LetterSpace&) const = default;
};

/// Bar notation in ASCII: "3" or "2b" (2b is the opposite of 2).
std::string format_letter(const LetterSpace& space, int letter);

/// Parses "3" or "3b" into a natural-order letter of `space`. Unbarred numbers
/// above n are taken as natural-order letters, so "6" and "3b" agree in C^9.
/// Throws std::invalid_argument on malformed tokens or letters outside the space.
int parse_letter(const LetterSpace& space, std::string_view token);

}  // namespace osp
