#pragma once

#include <optional>
#include <string>

#include "acfgm/core/dense_vector.hpp"
#include "acfgm/core/sparse_matrix.hpp"

namespace acfgm {

/// Design matrix A (m x n) and right-hand side / labels b (length m).
struct Dataset {
  SparseMatrixCSR a;
  DenseVector b;
  std::string name;
  std::string provenance;            // "file:<path>" or "generator:<family> seed=<s>"
  std::optional<DenseVector> x_star;  // known minimizer, if any

  std::size_t rows() const noexcept { return a.rows(); }
  std::size_t cols() const noexcept { return a.cols(); }
};

/// Throws InvalidInput when A.rows != len(b) or x_star has the wrong length.
void validate(const Dataset& data);

/// True when every label is -1 or +1.
bool has_binary_labels(const Dataset& data);

}  // namespace acfgm
