#include "osp/schubert.hpp"

#include <algorithm>
#include <stdexcept>

namespace osp {

int EchelonPattern::count(EntryState state) const {
  int total = 0;
  for (const auto& row : grid) total += static_cast<int>(std::count(row.begin(), row.end(), state));
  return total;
}

std::string EchelonPattern::render() const {
  std::string out;
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ' ';
      switch (row[c]) {
        case EntryState::One: out += '1'; break;
        case EntryState::Zero: out += '0'; break;
        case EntryState::Free: out += '*'; break;
        case EntryState::Determined: out += '.'; break;
      }
    }
    out += '\n';
  }
  return out;
}

EchelonPattern echelon_pattern(const std::vector<int>& pivots, const LetterSpace& space) {
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (!space.contains(pivots[r])) throw std::invalid_argument("pivot outside the ambient");
    for (std::size_t s = 0; s < r; ++s) {
      if (pivots[s] == pivots[r]) throw std::invalid_argument("duplicate pivot");
      if (space.has_opposite(pivots[r]) && space.opposite(pivots[r]) == pivots[s]) {
        throw std::invalid_argument("opposed pivots violate isotropy");
      }
    }
  }
  EchelonPattern pattern{space, pivots, {}};
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    std::vector<EntryState> row(space.dimension(), EntryState::Free);
    for (int letter = space.first; letter <= space.last; ++letter) {
      auto& state = row[letter - space.first];
      const auto above = pivots.begin(), upto = pivots.begin() + static_cast<std::ptrdiff_t>(r);
      if (letter == pivots[r]) {
        state = EntryState::One;
      } else if (letter > pivots[r] || std::find(above, upto, letter) != upto) {
        state = EntryState::Zero;
      } else if (space.has_opposite(letter) &&
                 std::find(above, upto, space.opposite(letter)) != upto) {
        state = EntryState::Determined;
      }
    }
    pattern.grid.push_back(std::move(row));
  }
  return pattern;
}

// ---------------------------------------------------------------------------

IntPolynomial::IntPolynomial(std::vector<std::uint64_t> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial IntPolynomial::q_integer(int m) {
  return IntPolynomial(std::vector<std::uint64_t>(std::max(m, 0), 1));
}

void IntPolynomial::add_monomial(int degree, std::uint64_t coefficient) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  if (coefficient == 0) return;
  if (static_cast<int>(coeffs_.size()) <= degree) coeffs_.resize(degree + 1, 0);
  coeffs_[degree] += coefficient;
}

std::uint64_t IntPolynomial::at_one() const {
  std::uint64_t sum = 0;
  for (auto c : coeffs_) sum += c;
  return sum;
}

bool IntPolynomial::is_palindromic() const {
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    if (coeffs_[d] == 0) continue;
    if (!out.empty()) out += " + ";
    if (d == 0 || coeffs_[d] != 1) out += std::to_string(coeffs_[d]);
    if (d >= 1) out += "q";
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::uint64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

// ---------------------------------------------------------------------------

Ambient Ambient::grassmannian(int k, int N) {
  const auto space = LetterSpace::from_dimension(N);
  if (N < 2) throw std::invalid_argument("ambient dimension must be at least 2");
  if (k < 1 || k > space.max_isotropic()) {
    throw std::invalid_argument("isotropic grassmannian needs 1 <= k <= " +
                                std::to_string(space.max_isotropic()));
  }
  return {Manifold::Grassmannian, N, k};
}

Ambient Ambient::flag(int N) {
  if (N < 2) throw std::invalid_argument("flag manifold needs N >= 2");
  return {Manifold::Flag, N, 0};
}

std::string Ambient::to_string() const {
  if (kind == Manifold::Flag) return "F_w(" + std::to_string(N) + ")";
  return "G_w(" + std::to_string(k) + "," + std::to_string(N) + ")";
}

std::string to_string(const CellLabel& label) {
  return std::visit([](const auto& l) { return l.to_string(); }, label);
}

std::vector<CellLabel> cells(const Ambient& ambient) {
  std::vector<CellLabel> out;
  if (ambient.kind == Manifold::Grassmannian) {
    for (auto& index : admissible_indices(ambient.k, ambient.letters())) out.emplace_back(std::move(index));
  } else {
    auto group = ambient.odd() ? enumerate_weyl_odd(ambient.n()) : enumerate_weyl_even(ambient.n());
    for (auto& w : group) out.emplace_back(std::move(w));
  }
  return out;
}

std::vector<int> pivots_of(const CellLabel& label) {
  if (const auto* index = std::get_if<AdmissibleIndex>(&label)) return index->entries();
  return std::get<SignedPermutation>(label).window();
}

LetterSpace columns_of(const CellLabel& label) {
  if (const auto* index = std::get_if<AdmissibleIndex>(&label)) return index->space();
  const auto& w = std::get<SignedPermutation>(label);
  if (w.family() == Family::Even) return LetterSpace::even(w.n());
  if (!w.avoids_zero_bar()) {
    throw std::invalid_argument("window containing 0b does not label a cell of F_w(2n+1)");
  }
  return LetterSpace::odd(w.n());
}

int cell_dimension(const CellLabel& label) {
  return echelon_pattern(pivots_of(label), columns_of(label)).count(EntryState::Free);
}

int ambient_dimension(const Ambient& ambient) {
  const int n = ambient.n();
  if (ambient.kind == Manifold::Flag) return ambient.odd() ? n * (n + 1) : n * n;
  const int k = ambient.k;
  return k * (ambient.N - k) - k * (k - 1) / 2;
}

IntPolynomial poincare_polynomial(const Ambient& ambient) {
  IntPolynomial p;
  for (const auto& cell : cells(ambient)) p.add_monomial(cell_dimension(cell));
  return p;
}

IntPolynomial odd_flag_poincare_closed_form(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  IntPolynomial p = IntPolynomial::q_integer(n + 1);
  for (int i = 1; i <= n; ++i) p = p * IntPolynomial::q_integer(2 * i);
  return p;
}

AdmissibleIndex schubert_divisor(int k, int N) {
  if (N % 2 == 0 || N < 3) throw std::invalid_argument("Schubert divisor needs N = 2n+1 >= 3");
  const int n = (N - 1) / 2;
  if (k < 1 || k > n + 1) throw std::invalid_argument("k must lie in 1..n+1");
  const auto space = LetterSpace::odd(n);
  std::vector<int> entries;
  if (k <= n) {
    // (\bar{k+1}, \bar{k-1}, ..., \bar 1)
    entries.push_back(space.opposite(k + 1));
    for (int i = k - 1; i >= 1; --i) entries.push_back(space.opposite(i));
  } else {
    // (0, n, \bar{n-1}, ..., \bar 1)
    entries.push_back(0);
    entries.push_back(n);
    for (int i = n - 1; i >= 1; --i) entries.push_back(space.opposite(i));
  }
  return {space, std::move(entries)};
}

AdmissibleIndex ambient_hyperplane_index(int k, int n) {
  if (n < 1 || k < 1 || k > n + 1) throw std::invalid_argument("need 1 <= k <= n+1");
  const auto space = LetterSpace::extended(n);
  std::vector<int> entries;
  if (k == n + 1) entries.push_back(0);
  for (int i = std::min(k, n); i >= 1; --i) entries.push_back(space.opposite(i));
  return {space, std::move(entries)};
}

std::vector<AdmissibleIndex> hyperplane_interval(int k, int n) {
  const auto top = ambient_hyperplane_index(k, n);
  std::vector<AdmissibleIndex> out;
  for (auto& index : admissible_indices(k, LetterSpace::extended(n))) {
    if (index_leq(index, top)) out.push_back(std::move(index));
  }
  return out;
}

bool variety_contains(const AdmissibleIndex& cell, const AdmissibleIndex& variety) {
  return index_leq(cell, variety);
}

bool variety_contains(const SignedPermutation& cell, const SignedPermutation& variety) {
  return bruhat_leq(cell, variety);
}

std::string IncidenceCondition::to_string() const {
  return "dim(V_" + std::to_string(subspace) + " ∩ E_" + std::to_string(level) + ") " +
         (exact ? "= " : ">= ") + std::to_string(bound);
}

std::vector<IncidenceCondition> incidence_conditions(const CellLabel& label, bool closure) {
  std::vector<IncidenceCondition> out;
  if (const auto* index = std::get_if<AdmissibleIndex>(&label)) {
    const auto& space = index->space();
    if (closure) {
      for (int a = 0; a < index->k(); ++a) {
        out.push_back({index->k(), index->entries()[a], a + 1, false});
      }
    } else {
      for (int j = space.first; j <= space.last; ++j) {
        const auto& e = index->entries();
        const int jumps = static_cast<int>(std::upper_bound(e.begin(), e.end(), j) - e.begin());
        out.push_back({index->k(), j, jumps, true});
      }
    }
    return out;
  }
  const auto& w = std::get<SignedPermutation>(label);
  const auto columns = columns_of(label);
  for (int i = w.first_position(); i < w.first_position() + w.rank(); ++i) {
    for (int j = columns.first; j <= columns.last; ++j) {
      out.push_back({i - w.first_position() + 1, j, rank_function(w, i, j), !closure});
    }
  }
  return out;
}

}  // namespace osp
