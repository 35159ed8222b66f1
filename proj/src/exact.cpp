#include "osp/exact.hpp"

#include <algorithm>
#include <stdexcept>

namespace osp {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

ExactMatrix ExactMatrix::identity(std::size_t size) {
  ExactMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

std::vector<ExactScalar> ExactMatrix::multiply(const std::vector<ExactScalar>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in matrix product");
  std::vector<ExactScalar> y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    ExactScalar sum = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn((*this)(r, c)) != 0) sum += (*this)(r, c) * x[c];
    }
    y[r] = sum;
  }
  return y;
}

void make_primitive(std::vector<BigInt>& v) {
  BigInt g = 0;
  for (const auto& x : v) {
    if (sgn(x) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g == 0) return;
  auto first = std::find_if(v.begin(), v.end(), [](const BigInt& x) { return sgn(x) != 0; });
  if (sgn(*first) < 0) g = -g;
  if (g != 1) {
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

KernelAndRank kernel_and_rank(const ExactMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();

  // Clear denominators row by row; scaling rows changes neither rank nor kernel.
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    BigInt lcm = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      a[r][c] = m(r, c).get_num() * (lcm / m(r, c).get_den());
    }
  }

  // Bareiss: after step t every entry below row t is a (t+1)-minor, so the
  // division by the previous pivot is exact.
  KernelAndRank result;
  BigInt previous = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[row]);
    for (std::size_t r = row + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        a[r][c] = a[row][col] * a[r][c] - a[r][col] * a[row][c];
        mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), previous.get_mpz_t());
      }
      a[r][col] = 0;
    }
    previous = a[row][col];
    result.pivot_columns.push_back(col);
    ++row;
  }
  result.rank = row;

  // Back substitution over the rationals, one kernel vector per free column.
  std::vector<bool> is_pivot(cols, false);
  for (auto c : result.pivot_columns) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<ExactScalar> x(cols);
    x[free] = 1;
    for (std::size_t t = result.rank; t-- > 0;) {
      const std::size_t pc = result.pivot_columns[t];
      ExactScalar sum = 0;
      for (std::size_t c = pc + 1; c < cols; ++c) {
        if (sgn(a[t][c]) != 0 && sgn(x[c]) != 0) sum += ExactScalar(a[t][c]) * x[c];
      }
      x[pc] = -sum / ExactScalar(a[t][pc]);
    }
    BigInt lcm = 1;
    for (const auto& v : x) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    std::vector<BigInt> integral(cols);
    for (std::size_t c = 0; c < cols; ++c) integral[c] = x[c].get_num() * (lcm / x[c].get_den());
    make_primitive(integral);
    for (std::size_t c = 0; c < cols; ++c) x[c] = ExactScalar(integral[c]);
    result.kernel.push_back(std::move(x));
  }
  return result;
}

IntegerRowSpace::IntegerRowSpace(std::size_t length) : length_(length) {}

bool IntegerRowSpace::insert(std::vector<BigInt> v) {
  if (v.size() != length_) throw std::invalid_argument("vector length mismatch");
  make_primitive(v);
  BigInt p, c;
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    const std::size_t lead = leads_[t];
    if (sgn(v[lead]) == 0) continue;
    const auto& b = rows_[t];
    // v <- (b_lead / g) * v - (v_lead / g) * b kills position `lead`.
    BigInt g;
    mpz_gcd(g.get_mpz_t(), b[lead].get_mpz_t(), v[lead].get_mpz_t());
    p = b[lead] / g;
    c = v[lead] / g;
    for (std::size_t i = 0; i < length_; ++i) {
      if (sgn(b[i]) == 0) {
        if (sgn(v[i]) != 0) v[i] *= p;
      } else {
        v[i] = p * v[i] - c * b[i];
      }
    }
    make_primitive(v);
  }
  auto it = std::find_if(v.begin(), v.end(), [](const BigInt& x) { return sgn(x) != 0; });
  if (it == v.end()) return false;
  const std::size_t lead = static_cast<std::size_t>(it - v.begin());
  // Keep rows sorted by leading position so that reduction is a single pass.
  std::size_t at = 0;
  while (at < leads_.size() && leads_[at] < lead) ++at;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(v));
  leads_.insert(leads_.begin() + static_cast<std::ptrdiff_t>(at), lead);
  return true;
}

std::string to_string(const ExactScalar& x) { return x.get_str(); }

}  // namespace osp
