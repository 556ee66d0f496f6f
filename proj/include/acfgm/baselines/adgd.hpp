#pragma once

#include <cstddef>
#include <memory>

#include "acfgm/core/method.hpp"
#include "acfgm/core/problem.hpp"
#include "acfgm/solver/config.hpp"

namespace acfgm {

struct AdgdOptions {
  double gamma = 1.5;  // shrink factor of the initial stepsize search
  std::size_t max_trials = 60;
  ProbeOptions probe;
};

/// Adaptive proximal gradient descent (Malitsky and Mishchenko):
///   lambda_k = min{ sqrt(1 + theta_{k-1}) lambda_{k-1},
///                   ||x_k - x_{k-1}|| / (2 ||g_k - g_{k-1}||) },  theta_k = lambda_k / lambda_{k-1}
///   x_{k+1}  = prox(h, x_k, g_k, lambda_k)
/// with theta_0 = +inf. The first step uses lambda_0 = 1/L0 shrunk by gamma
/// until lambda_0 * ||g_1 - g_0|| / ||x_1 - x_0|| <= 1/2; the accepted trial
/// is iteration 1.
struct AdgdState {
  std::size_t k = 0;
  DenseVector x, x_prev;
  DenseVector gradient, gradient_prev;
  double value = 0.0;
  double lambda = 0.0;  // stepsize of the last step
  double theta = 0.0;
  double curvature = 0.0;  // ||g_k - g_{k-1}|| / ||x_k - x_{k-1}||
  std::size_t oracle_calls = 0;
  std::size_t init_oracle_calls = 0;
  std::size_t init_trials = 0;
  bool stationary = false;

  // iteration 1, precomputed by the initial search
  DenseVector first_x;
  SmoothEval first_eval;
  double first_lambda = 0.0;
  bool first_pending = false;
};

AdgdState adgd_initialize(const CompositeProblem& problem, DenseVector x0,
                          const AdgdOptions& options);

/// One step, one oracle call.
AdgdState adgd_iterate(AdgdState state, const CompositeProblem& problem);

class AdgdMethod final : public IterativeMethod {
 public:
  AdgdMethod(std::shared_ptr<const CompositeProblem> problem, DenseVector x0,
             AdgdOptions options = {});

  std::string name() const override { return "AdGD"; }
  void step() override;
  bool finished() const override { return state_.stationary; }
  std::size_t iteration() const override { return state_.k; }
  std::size_t oracle_calls() const override { return state_.oracle_calls; }
  std::size_t init_oracle_calls() const override { return state_.init_oracle_calls; }
  DenseVector solution() const override { return state_.x; }
  IterationReport report() const override;

  const AdgdState& state() const noexcept { return state_; }

 private:
  std::shared_ptr<const CompositeProblem> problem_;
  AdgdState state_;
};

}  // namespace acfgm
