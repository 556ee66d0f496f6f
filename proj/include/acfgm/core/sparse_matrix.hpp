#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "acfgm/core/dense_vector.hpp"

namespace acfgm {

/// Compressed sparse row matrix. Validated on construction:
/// row_ptr[0] == 0, row_ptr nondecreasing, row_ptr[rows] == nnz, column
/// indices in range and strictly increasing within each row.
class SparseMatrixCSR {
 public:
  SparseMatrixCSR() : row_ptr_(1, 0) {}
  SparseMatrixCSR(std::size_t rows, std::size_t cols, std::vector<std::size_t> row_ptr,
                  std::vector<std::size_t> col_idx, std::vector<double> values);

  /// Row-major dense input; exact zeros are dropped.
  static SparseMatrixCSR from_dense(std::size_t rows, std::size_t cols,
                                    std::span<const double> row_major);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nnz() const noexcept { return values_.size(); }

  std::span<const std::size_t> row_ptr() const noexcept { return row_ptr_; }
  std::span<const std::size_t> col_idx() const noexcept { return col_idx_; }
  std::span<const double> values() const noexcept { return values_; }

  bool operator==(const SparseMatrixCSR& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> row_ptr_;
  std::vector<std::size_t> col_idx_;
  std::vector<double> values_;
};

/// A x
DenseVector matvec(const SparseMatrixCSR& a, const DenseVector& x);
/// A^T v
DenseVector matvec_t(const SparseMatrixCSR& a, const DenseVector& v);

}  // namespace acfgm
