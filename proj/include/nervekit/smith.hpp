#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace nervekit {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix with exact entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BigInt& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Column-major sparse matrix with small entries; boundary and chain maps.
struct SparseIntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::size_t, long long>>> columns;  // sorted by row

  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

  /// Adds value at (row, col), merging with an existing entry.
  void add(std::size_t row, std::size_t col, long long value);
  IntMatrix to_dense() const;
  bool is_zero() const;
};

/// Composite a * b, dimensions checked by the caller.
SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b);

/// left * input * right == diagonal, with left and right unimodular and the
/// diagonal entries non-negative in divisibility order.
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;

  std::size_t rank() const;
  /// Nonzero diagonal entries d1 | d2 | ...
  std::vector<BigInt> invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Determinant +-1 check by exact fraction-free elimination.
bool is_unimodular(const IntMatrix& m);

/// Nonzero invariant factors of a sparse matrix, without transforms. Pivots
/// are chosen by least absolute value, then by fill-in estimate.
std::vector<BigInt> elementary_divisors(const SparseIntMatrix& m);

/// Turns any list of nonzero diagonal entries into the divisibility chain of
/// the same abelian group.
std::vector<BigInt> normalize_divisors(std::vector<BigInt> diag);

}  // namespace nervekit
