#include "osp/letters.hpp"

#include <charconv>
#include <stdexcept>

namespace osp {

LetterSpace LetterSpace::even(int n) {
  if (n < 1) throw std::invalid_argument("C^{2n} needs n >= 1");
  return {n, 1, 2 * n};
}

LetterSpace LetterSpace::odd(int n) {
  if (n < 0) throw std::invalid_argument("C^{2n+1} needs n >= 0");
  return {n, 0, 2 * n};
}

LetterSpace LetterSpace::extended(int n) {
  if (n < 0) throw std::invalid_argument("C^{2n+2} needs n >= 0");
  return {n, 0, 2 * n + 1};
}

LetterSpace LetterSpace::from_dimension(int N) {
  if (N < 1) throw std::invalid_argument("ambient dimension must be positive");
  return N % 2 == 0 ? even(N / 2) : odd((N - 1) / 2);
}

std::string format_letter(const LetterSpace& space, int letter) {
  if (!space.contains(letter)) throw std::invalid_argument("letter outside ambient");
  if (space.barred(letter)) return std::to_string(space.opposite(letter)) + "b";
  return std::to_string(letter);
}

int parse_letter(const LetterSpace& space, std::string_view token) {
  bool barred = false;
  if (!token.empty() && (token.back() == 'b' || token.back() == 'B')) {
    barred = true;
    token.remove_suffix(1);
  }
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw std::invalid_argument("malformed letter '" + std::string(token) + "'");
  }
  // An unbarred number beyond n is read as a natural-order letter.
  if (value < 0 || value > (barred ? space.n : space.last)) {
    throw std::invalid_argument("letter " + std::string(token) + (barred ? "b" : "") + " out of range");
  }
  const int letter = barred ? space.opposite(value) : value;
  if (!space.contains(letter)) {
    throw std::invalid_argument("letter '" + std::string(token) + (barred ? "b" : "") +
                                "' is not in this ambient");
  }
  return letter;
}

}  // namespace osp
