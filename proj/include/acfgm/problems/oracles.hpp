#pragma once

#include <cstddef>
#include <memory>

#include "acfgm/core/problem.hpp"
#include "acfgm/problems/dataset.hpp"

namespace acfgm {

/// f(x) = (1/m) ||Ax - b||^2, g(x) = (2/m) A^T (Ax - b), h = 0.
std::shared_ptr<CompositeProblem> least_squares_oracle(std::shared_ptr<const Dataset> data);

/// Least squares plus h = lambda ||x||_1. Throws ConfigError for lambda < 0.
std::shared_ptr<CompositeProblem> lasso_oracle(std::shared_ptr<const Dataset> data, double lambda);

/// f(x) = ||Ax - b|| / sqrt(m) with subgradient A^T r / (sqrt(m) ||r||), and the
/// zero vector at zero residual; h = lambda ||x||_1.
std::shared_ptr<CompositeProblem> sqrt_lasso_oracle(std::shared_ptr<const Dataset> data,
                                                    double lambda);

/// f(x) = sum_i log(1 + exp(-b_i <a_i, x>)), h = lambda ||x||_1. Labels must
/// be +-1 (InvalidInput otherwise).
std::shared_ptr<CompositeProblem> logistic_oracle(std::shared_ptr<const Dataset> data,
                                                  double lambda);

/// log(1 + exp(u)) without overflow.
double softplus(double u);
/// 1 / (1 + exp(-u)) without overflow.
double sigmoid(double u);

struct EigenEstimate {
  double value = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Largest eigenvalue of A^T A by power iteration from a fixed seeded start,
/// stopping when successive estimates agree to `tolerance` relative.
EigenEstimate largest_eigenvalue_gram(const SparseMatrixCSR& a, double tolerance = 1e-8,
                                      std::size_t max_iterations = 10000);

/// Smoothness constants: 2 lambda_max(A^T A) / m for least squares and
/// lambda_max(A^T A) / 4 for the logistic loss (K = -diag(b) A has K^T K = A^T A).
double least_squares_lipschitz(const Dataset& data);
double logistic_lipschitz(const Dataset& data);

}  // namespace acfgm
