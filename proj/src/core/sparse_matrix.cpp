#include "acfgm/core/sparse_matrix.hpp"

#include <cmath>
#include <string>

#include "acfgm/core/errors.hpp"

namespace acfgm {

SparseMatrixCSR::SparseMatrixCSR(std::size_t rows, std::size_t cols,
                                 std::vector<std::size_t> row_ptr,
                                 std::vector<std::size_t> col_idx, std::vector<double> values)
    : rows_(rows),
      cols_(cols),
      row_ptr_(std::move(row_ptr)),
      col_idx_(std::move(col_idx)),
      values_(std::move(values)) {
  if (row_ptr_.size() != rows_ + 1) throw InvalidInput("CSR: row_ptr must have rows+1 entries");
  if (row_ptr_.front() != 0) throw InvalidInput("CSR: row_ptr[0] must be 0");
  if (col_idx_.size() != values_.size()) throw InvalidInput("CSR: col_idx/values length mismatch");
  if (row_ptr_.back() != values_.size()) throw InvalidInput("CSR: row_ptr[rows] must equal nnz");
  for (std::size_t r = 0; r < rows_; ++r) {
    if (row_ptr_[r + 1] < row_ptr_[r]) throw InvalidInput("CSR: row_ptr must be nondecreasing");
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      if (col_idx_[k] >= cols_) {
        throw InvalidInput("CSR: column index out of range in row " + std::to_string(r));
      }
      if (k > row_ptr_[r] && col_idx_[k] <= col_idx_[k - 1]) {
        throw InvalidInput("CSR: column indices not strictly increasing in row " +
                           std::to_string(r));
      }
      if (!std::isfinite(values_[k])) throw NumericError("CSR: non-finite value");
    }
  }
}

SparseMatrixCSR SparseMatrixCSR::from_dense(std::size_t rows, std::size_t cols,
                                            std::span<const double> row_major) {
  if (row_major.size() != rows * cols) throw InvalidInput("from_dense: size mismatch");
  std::vector<std::size_t> row_ptr{0};
  std::vector<std::size_t> col_idx;
  std::vector<double> values;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const double v = row_major[r * cols + c];
      if (v != 0.0) {
        col_idx.push_back(c);
        values.push_back(v);
      }
    }
    row_ptr.push_back(values.size());
  }
  return SparseMatrixCSR(rows, cols, std::move(row_ptr), std::move(col_idx), std::move(values));
}

DenseVector matvec(const SparseMatrixCSR& a, const DenseVector& x) {
  if (x.size() != a.cols()) throw InvalidInput("matvec: x length must equal A.cols");
  const auto rp = a.row_ptr();
  const auto ci = a.col_idx();
  const auto va = a.values();
  const auto xv = x.values();
  std::vector<double> out(a.rows(), 0.0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    double s = 0.0;
    for (std::size_t k = rp[r]; k < rp[r + 1]; ++k) s += va[k] * xv[ci[k]];
    out[r] = s;
  }
  return DenseVector(std::move(out));
}

DenseVector matvec_t(const SparseMatrixCSR& a, const DenseVector& v) {
  if (v.size() != a.rows()) throw InvalidInput("matvec_t: v length must equal A.rows");
  const auto rp = a.row_ptr();
  const auto ci = a.col_idx();
  const auto va = a.values();
  std::vector<double> out(a.cols(), 0.0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const double vr = v[r];
    if (vr == 0.0) continue;
    for (std::size_t k = rp[r]; k < rp[r + 1]; ++k) out[ci[k]] += va[k] * vr;
  }
  return DenseVector(std::move(out));
}

}  // namespace acfgm
