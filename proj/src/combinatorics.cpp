#include "osp/combinatorics.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace osp {
namespace {

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> out;
  while (true) {
    auto comma = text.find(',');
    auto token = text.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    out.push_back(token);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

void check_n(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
}

// Depth-first over positions, letters tried in natural order: lexicographic output.
void extend_windows(const LetterSpace& letters, int rank, bool skip_zero_bar,
                    std::vector<int>& window, std::vector<bool>& used,
                    std::vector<std::vector<int>>& out) {
  if (static_cast<int>(window.size()) == rank) {
    out.push_back(window);
    return;
  }
  for (int letter = letters.first; letter <= letters.last; ++letter) {
    if (skip_zero_bar && letter == letters.last && letters.first == 0) continue;
    const int magnitude = std::min(letter, letters.opposite(letter));
    const int slot = magnitude - letters.first;
    if (used[slot]) continue;
    used[slot] = true;
    window.push_back(letter);
    extend_windows(letters, rank, skip_zero_bar, window, used, out);
    window.pop_back();
    used[slot] = false;
  }
}

std::vector<SignedPermutation> enumerate(Family family, int n, bool skip_zero_bar) {
  check_n(n);
  const LetterSpace letters =
      family == Family::Even ? LetterSpace::even(n) : LetterSpace::extended(n);
  const int rank = family == Family::Even ? n : n + 1;
  std::vector<std::vector<int>> windows;
  std::vector<int> window;
  std::vector<bool> used(rank, false);
  extend_windows(letters, rank, skip_zero_bar, window, used, windows);
  std::vector<SignedPermutation> out;
  out.reserve(windows.size());
  for (auto& w : windows) out.emplace_back(family, n, std::move(w));
  return out;
}

std::vector<int> sorted_prefix(const SignedPermutation& w, int i) {
  std::vector<int> prefix(w.window().begin(), w.window().begin() + i);
  std::sort(prefix.begin(), prefix.end());
  return prefix;
}

void check_comparable(const SignedPermutation& w, const SignedPermutation& v) {
  if (w.family() != v.family() || w.n() != v.n()) {
    throw std::invalid_argument("signed permutations of different families or ranks");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// SignedPermutation

SignedPermutation::SignedPermutation(Family family, int n, std::vector<int> window)
    : family_(family), n_(n), window_(std::move(window)) {
  check_n(n);
  const int expected = family == Family::Even ? n : n + 1;
  if (static_cast<int>(window_.size()) != expected) {
    throw std::invalid_argument("window must have " + std::to_string(expected) + " letters");
  }
  const LetterSpace space = letters();
  std::vector<bool> seen(expected, false);
  for (int letter : window_) {
    if (!space.contains(letter)) throw std::invalid_argument("window letter out of range");
    const int slot = std::min(letter, space.opposite(letter)) - space.first;
    if (seen[slot]) throw std::invalid_argument("window repeats a magnitude");
    seen[slot] = true;
  }
}

SignedPermutation SignedPermutation::identity(Family family, int n) {
  check_n(n);
  std::vector<int> window;
  const int first = family == Family::Even ? 1 : 0;
  const int rank = family == Family::Even ? n : n + 1;
  for (int p = 0; p < rank; ++p) window.push_back(first + p);
  return {family, n, std::move(window)};
}

SignedPermutation SignedPermutation::parse(Family family, int n, std::string_view text) {
  check_n(n);
  const LetterSpace space =
      family == Family::Even ? LetterSpace::even(n) : LetterSpace::extended(n);
  std::vector<int> window;
  for (auto token : split_commas(text)) window.push_back(parse_letter(space, token));
  return {family, n, std::move(window)};
}

LetterSpace SignedPermutation::letters() const {
  return family_ == Family::Even ? LetterSpace::even(n_) : LetterSpace::extended(n_);
}

int SignedPermutation::at(int position) const {
  const int p = position - first_position();
  if (p < 0 || p >= rank()) throw std::out_of_range("position outside window");
  return window_[p];
}

std::vector<int> SignedPermutation::full_permutation() const {
  const LetterSpace space = letters();
  std::vector<int> full(space.dimension());
  for (int p = 0; p < rank(); ++p) {
    const int position_letter = first_position() + p;
    full[position_letter - space.first] = window_[p];
    full[space.opposite(position_letter) - space.first] = space.opposite(window_[p]);
  }
  return full;
}

bool SignedPermutation::avoids_zero_bar() const {
  if (family_ == Family::Even) return true;
  return std::find(window_.begin(), window_.end(), 2 * n_ + 1) == window_.end();
}

std::string SignedPermutation::to_string() const {
  const LetterSpace space = letters();
  std::string out;
  for (std::size_t p = 0; p < window_.size(); ++p) {
    if (p) out += ',';
    out += format_letter(space, window_[p]);
  }
  return out;
}

std::strong_ordering operator<=>(const SignedPermutation& a, const SignedPermutation& b) {
  if (auto c = static_cast<int>(a.family_) <=> static_cast<int>(b.family_); c != 0) return c;
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return a.window_ <=> b.window_;
}

// ---------------------------------------------------------------------------
// AdmissibleIndex

AdmissibleIndex::AdmissibleIndex(LetterSpace space, std::vector<int> entries)
    : space_(space), entries_(std::move(entries)) {
  for (std::size_t a = 0; a < entries_.size(); ++a) {
    if (!space_.contains(entries_[a])) throw std::invalid_argument("index letter out of range");
    if (a > 0 && entries_[a - 1] >= entries_[a]) {
      throw std::invalid_argument("index must be strictly increasing");
    }
  }
  for (int letter : entries_) {
    if (space_.has_opposite(letter) && letter < space_.opposite(letter) &&
        std::binary_search(entries_.begin(), entries_.end(), space_.opposite(letter))) {
      throw std::invalid_argument("index contains an opposed pair");
    }
  }
}

AdmissibleIndex AdmissibleIndex::parse(LetterSpace space, std::string_view text) {
  std::vector<int> entries;
  if (!text.empty()) {
    for (auto token : split_commas(text)) entries.push_back(parse_letter(space, token));
  }
  std::sort(entries.begin(), entries.end());
  return {space, std::move(entries)};
}

bool AdmissibleIndex::contains(int letter) const {
  return std::binary_search(entries_.begin(), entries_.end(), letter);
}

std::string AdmissibleIndex::to_string() const {
  std::string out = "(";
  for (std::size_t a = 0; a < entries_.size(); ++a) {
    if (a) out += ',';
    out += format_letter(space_, entries_[a]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Enumeration, length, Bruhat order

std::vector<SignedPermutation> enumerate_weyl_even(int n) {
  return enumerate(Family::Even, n, false);
}

std::vector<SignedPermutation> enumerate_weyl_odd(int n) {
  return enumerate(Family::Odd, n, true);
}

std::vector<SignedPermutation> enumerate_weyl_odd_ambient(int n) {
  return enumerate(Family::Odd, n, false);
}

SignedPermutation odd_interval_top(int n) {
  check_n(n);
  std::vector<int> window;
  for (int i = 1; i <= n; ++i) window.push_back(2 * n + 1 - i);
  window.push_back(0);
  return {Family::Odd, n, std::move(window)};
}

std::vector<SignedPermutation> enumerate_weyl_odd_by_interval(int n) {
  const auto top = odd_interval_top(n);
  std::vector<SignedPermutation> out;
  for (auto& w : enumerate_weyl_odd_ambient(n)) {
    if (bruhat_leq(w, top)) out.push_back(std::move(w));
  }
  return out;
}

int length(const SignedPermutation& w) {
  const auto full = w.full_permutation();
  int inversions = 0;
  for (std::size_t a = 0; a < full.size(); ++a) {
    for (std::size_t b = a + 1; b < full.size(); ++b) {
      if (full[a] > full[b]) ++inversions;
    }
  }
  const LetterSpace space = w.letters();
  int barred = 0;
  for (int letter : w.window()) barred += space.barred(letter) ? 1 : 0;
  return (inversions + barred) / 2;
}

AdmissibleIndex flatten_prefix(const SignedPermutation& w, int i) {
  if (i < 1 || i > w.rank()) throw std::out_of_range("prefix length outside 1..rank");
  auto prefix = sorted_prefix(w, i);
  LetterSpace space = w.letters();
  if (w.family() == Family::Odd && prefix.back() <= 2 * w.n()) space = LetterSpace::odd(w.n());
  return {space, std::move(prefix)};
}

bool bruhat_leq(const SignedPermutation& w, const SignedPermutation& v) {
  check_comparable(w, v);
  for (int i = 1; i <= w.rank(); ++i) {
    const auto a = sorted_prefix(w, i);
    const auto b = sorted_prefix(v, i);
    for (int t = 0; t < i; ++t) {
      if (a[t] > b[t]) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> reflections(const LetterSpace& letters) {
  const int size = letters.dimension();
  auto slot = [&](int letter) { return letter - letters.first; };
  std::set<std::vector<int>> unique;
  for (int i = letters.first; i <= letters.last; ++i) {
    for (int j = letters.first; j <= letters.last; ++j) {
      if (j == i) continue;
      std::vector<int> sigma(size);
      for (int t = 0; t < size; ++t) sigma[t] = letters.first + t;
      if (j == letters.opposite(i)) {
        std::swap(sigma[slot(i)], sigma[slot(j)]);
      } else {
        std::swap(sigma[slot(i)], sigma[slot(j)]);
        std::swap(sigma[slot(letters.opposite(i))], sigma[slot(letters.opposite(j))]);
      }
      unique.insert(std::move(sigma));
    }
  }
  return {unique.begin(), unique.end()};
}

bool bruhat_leq_chain_oracle(const SignedPermutation& w, const SignedPermutation& v) {
  check_comparable(w, v);
  if (w.rank() > 5) throw std::invalid_argument("chain oracle is limited to rank <= 5");
  if (w == v) return true;
  const int target = length(v);
  if (length(w) >= target) return false;

  const LetterSpace space = w.letters();
  const auto refl = reflections(space);
  std::set<std::vector<int>> seen{w.window()};
  std::deque<std::pair<SignedPermutation, int>> queue{{w, length(w)}};
  while (!queue.empty()) {
    auto [current, current_length] = queue.front();
    queue.pop_front();
    if (current_length >= target) continue;
    for (const auto& sigma : refl) {
      std::vector<int> next(current.window());
      for (int& letter : next) letter = sigma[letter - space.first];
      SignedPermutation candidate(w.family(), w.n(), next);
      if (length(candidate) != current_length + 1) continue;
      if (candidate == v) return true;
      if (seen.insert(next).second) queue.emplace_back(std::move(candidate), current_length + 1);
    }
  }
  return false;
}

int rank_function(const SignedPermutation& w, int i, int j) {
  const int first_column = w.family() == Family::Even ? 1 : 0;
  const int last_column = 2 * w.n();
  if (i < w.first_position() || i >= w.first_position() + w.rank() || j < first_column ||
      j > last_column) {
    throw std::out_of_range("(i, j) outside the rank rectangle");
  }
  int count = 0;
  for (int p = w.first_position(); p <= i; ++p) count += w.at(p) <= j ? 1 : 0;
  return count;
}

RankTable rank_table(const SignedPermutation& w) {
  RankTable table;
  table.first_position = w.first_position();
  table.first_column = w.family() == Family::Even ? 1 : 0;
  for (int i = w.first_position(); i < w.first_position() + w.rank(); ++i) {
    std::vector<int> row;
    for (int j = table.first_column; j <= 2 * w.n(); ++j) row.push_back(rank_function(w, i, j));
    table.values.push_back(std::move(row));
  }
  return table;
}

// ---------------------------------------------------------------------------
// Admissible indices

std::vector<AdmissibleIndex> admissible_indices(int k, const LetterSpace& space) {
  if (k < 0 || k > space.max_isotropic()) {
    throw std::invalid_argument("k must lie in 0.." + std::to_string(space.max_isotropic()));
  }
  std::vector<AdmissibleIndex> out;
  std::vector<int> current;
  // Increasing letters, never taking both members of an opposed pair.
  auto extend = [&](auto&& self, int next) -> void {
    if (static_cast<int>(current.size()) == k) {
      out.emplace_back(space, current);
      return;
    }
    for (int letter = next; letter <= space.last; ++letter) {
      if (space.has_opposite(letter) &&
          std::find(current.begin(), current.end(), space.opposite(letter)) != current.end()) {
        continue;
      }
      current.push_back(letter);
      self(self, letter + 1);
      current.pop_back();
    }
  };
  extend(extend, space.first);
  return out;
}

std::vector<AdmissibleIndex> admissible_indices(int k, int N) {
  return admissible_indices(k, LetterSpace::from_dimension(N));
}

std::uint64_t admissible_count(int k, const LetterSpace& space) {
  if (k < 0) return 0;
  auto pow2 = [](int e) { return e < 0 ? 0ULL : 1ULL << e; };
  if (space.first == 1) return binomial(space.n, k) * pow2(k);
  if (space.last == 2 * space.n + 1) return binomial(space.n + 1, k) * pow2(k);
  const std::uint64_t without_zero = binomial(space.n, k) * pow2(k);
  const std::uint64_t with_zero = k >= 1 ? binomial(space.n, k - 1) * pow2(k - 1) : 0;
  return without_zero + with_zero;
}

bool index_leq(const AdmissibleIndex& a, const AdmissibleIndex& b) {
  if (a.k() != b.k() || !(a.space() == b.space())) {
    throw std::invalid_argument("indices of different shapes are not comparable");
  }
  for (int t = 0; t < a.k(); ++t) {
    if (a.entries()[t] > b.entries()[t]) return false;
  }
  return true;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * static_cast<std::uint64_t>(n - k + i) / i;
  return result;
}

std::uint64_t factorial(int n) {
  std::uint64_t result = 1;
  for (int i = 2; i <= n; ++i) result *= static_cast<std::uint64_t>(i);
  return result;
}

}  // namespace osp
