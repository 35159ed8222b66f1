#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace osp {

/// Normalized arbitrary-precision rational (gcd 1, positive denominator).
using ExactScalar = mpq_class;
using BigInt = mpz_class;

/// Dense row-major matrix of exact rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  /// Builds from integer rows; all rows must have equal length.
  static ExactMatrix from_rows(const std::vector<std::vector<long>>& rows);
  static ExactMatrix identity(std::size_t size);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  ExactScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const ExactScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<ExactScalar> multiply(const std::vector<ExactScalar>& x) const;
  bool operator==(const ExactMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ExactScalar> data_;
};

struct KernelAndRank {
  std::size_t rank = 0;
  /// Basis of the right kernel {x : M x = 0}; each vector is integral and primitive.
  std::vector<std::vector<ExactScalar>> kernel;
  /// Pivot columns of the echelon form, in increasing order.
  std::vector<std::size_t> pivot_columns;
};

/// Rank and kernel basis by fraction-free (Bareiss) elimination. Rows are
/// first cleared of denominators; the pivot in each column is the first
/// nonzero entry at or below the current row. Deterministic for a given input.
KernelAndRank kernel_and_rank(const ExactMatrix& m);

/// Incrementally maintained row space of integer vectors. Each inserted vector
/// is reduced against the stored echelon rows by integer combinations
/// v <- p*v - c*b followed by division by the content, so entries stay small.
class IntegerRowSpace {
 public:
  explicit IntegerRowSpace(std::size_t length);

  /// Returns true if `v` was independent of the stored rows (and stores it).
  bool insert(std::vector<BigInt> v);
  std::size_t dimension() const { return rows_.size(); }
  std::size_t length() const { return length_; }
  /// Stored echelon rows (distinct leading positions, primitive, positive leading entry).
  const std::vector<std::vector<BigInt>>& rows() const { return rows_; }

 private:
  std::size_t length_;
  std::vector<std::vector<BigInt>> rows_;
  std::vector<std::size_t> leads_;
};

/// Divides by the gcd of the entries and makes the first nonzero entry positive.
void make_primitive(std::vector<BigInt>& v);

std::string to_string(const ExactScalar& x);

}  // namespace osp
