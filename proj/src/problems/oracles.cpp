#include "acfgm/problems/oracles.hpp"

#include <cmath>
#include <vector>

#include "acfgm/core/errors.hpp"
#include "acfgm/problems/generators.hpp"

namespace acfgm {

namespace {

std::shared_ptr<const Dataset> checked(std::shared_ptr<const Dataset> data) {
  if (!data) throw InvalidInput("null dataset");
  validate(*data);
  if (data->rows() == 0 || data->cols() == 0) throw InvalidInput("dataset is empty");
  return data;
}

void check_lambda(double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw ConfigError("penalty must be >= 0");
}

SmoothEval least_squares_eval(const Dataset& d, const DenseVector& x) {
  const double m = static_cast<double>(d.rows());
  const DenseVector r = matvec(d.a, x) - d.b;
  return {norm_sq(r) / m, (2.0 / m) * matvec_t(d.a, r)};
}

double least_squares_value(const Dataset& d, const DenseVector& x) {
  return norm_sq(matvec(d.a, x) - d.b) / static_cast<double>(d.rows());
}

std::shared_ptr<CompositeProblem> least_squares_with(std::shared_ptr<const Dataset> data,
                                                     ProxTerm term, const std::string& name) {
  data = checked(std::move(data));
  const std::size_t n = data->cols();
  return std::make_shared<CompositeProblem>(
      n, [data](const DenseVector& x) { return least_squares_eval(*data, x); }, term, name,
      [data](const DenseVector& x) { return least_squares_value(*data, x); });
}

}  // namespace

double softplus(double u) { return std::max(u, 0.0) + std::log1p(std::exp(-std::abs(u))); }

double sigmoid(double u) {
  if (u >= 0.0) return 1.0 / (1.0 + std::exp(-u));
  const double e = std::exp(u);
  return e / (1.0 + e);
}

std::shared_ptr<CompositeProblem> least_squares_oracle(std::shared_ptr<const Dataset> data) {
  return least_squares_with(std::move(data), ProxTerm::zero(), "least_squares");
}

std::shared_ptr<CompositeProblem> lasso_oracle(std::shared_ptr<const Dataset> data, double lambda) {
  check_lambda(lambda);
  return least_squares_with(std::move(data), ProxTerm::l1(lambda), "lasso");
}

std::shared_ptr<CompositeProblem> sqrt_lasso_oracle(std::shared_ptr<const Dataset> data,
                                                    double lambda) {
  check_lambda(lambda);
  data = checked(std::move(data));
  const double sm = std::sqrt(static_cast<double>(data->rows()));
  auto eval = [data, sm](const DenseVector& x) {
    const DenseVector r = matvec(data->a, x) - data->b;
    const double nr = norm(r);
    if (nr == 0.0) return SmoothEval{0.0, DenseVector(data->cols(), 0.0)};
    return SmoothEval{nr / sm, (1.0 / (sm * nr)) * matvec_t(data->a, r)};
  };
  auto value = [data, sm](const DenseVector& x) { return norm(matvec(data->a, x) - data->b) / sm; };
  return std::make_shared<CompositeProblem>(data->cols(), eval, ProxTerm::l1(lambda), "sqrt_lasso",
                                            value);
}

std::shared_ptr<CompositeProblem> logistic_oracle(std::shared_ptr<const Dataset> data,
                                                  double lambda) {
  check_lambda(lambda);
  data = checked(std::move(data));
  if (!has_binary_labels(*data)) throw InvalidInput("logistic regression needs labels in {-1, +1}");
  auto eval = [data](const DenseVector& x) {
    const DenseVector margin = matvec(data->a, x);
    std::vector<double> w(margin.size());
    double f = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const double u = -data->b[i] * margin[i];
      f += softplus(u);
      w[i] = -data->b[i] * sigmoid(u);
    }
    return SmoothEval{f, matvec_t(data->a, DenseVector(std::move(w)))};
  };
  auto value = [data](const DenseVector& x) {
    const DenseVector margin = matvec(data->a, x);
    double f = 0.0;
    for (std::size_t i = 0; i < margin.size(); ++i) f += softplus(-data->b[i] * margin[i]);
    return f;
  };
  return std::make_shared<CompositeProblem>(data->cols(), eval, ProxTerm::l1(lambda), "logistic",
                                            value);
}

EigenEstimate largest_eigenvalue_gram(const SparseMatrixCSR& a, double tolerance,
                                      std::size_t max_iterations) {
  EigenEstimate out;
  if (a.cols() == 0 || a.nnz() == 0) {
    out.converged = true;
    return out;
  }
  InstanceRng rng(0x5eed);
  std::vector<double> start(a.cols());
  for (auto& v : start) v = rng.normal();
  DenseVector v(std::move(start));
  v = (1.0 / norm(v)) * v;
  double prev = 0.0;
  for (std::size_t k = 1; k <= max_iterations; ++k) {
    DenseVector w = matvec_t(a, matvec(a, v));
    const double lambda = norm(w);
    out.iterations = k;
    out.value = lambda;
    if (lambda == 0.0) {
      out.converged = true;
      break;
    }
    v = (1.0 / lambda) * w;
    if (k > 1 && std::abs(lambda - prev) <= tolerance * lambda) {
      out.converged = true;
      break;
    }
    prev = lambda;
  }
  return out;
}

double least_squares_lipschitz(const Dataset& data) {
  return 2.0 * largest_eigenvalue_gram(data.a).value / static_cast<double>(data.rows());
}

double logistic_lipschitz(const Dataset& data) {
  return largest_eigenvalue_gram(data.a).value / 4.0;
}

}  // namespace acfgm
