#pragma once

#include <cstddef>
#include <memory>
#include <optional>

#include "acfgm/core/method.hpp"
#include "acfgm/core/problem.hpp"
#include "acfgm/solver/config.hpp"

namespace acfgm {

struct NsPgmOptions {
  double gamma = 2.0;
  double epsilon = 1e-10;
  std::size_t max_trials = 60;
  std::optional<double> initial_lipschitz;  // default: the L0 probe
  ProbeOptions probe;
};

/// Nesterov's universal primal gradient method. Each iteration tries
/// M = gamma^i L_k, i = 0, 1, ...:
///   x+ = prox(h, x_k, g(x_k), 1/M)
/// accepting when f(x+) <= f(x_k) + <g(x_k), x+ - x_k> + M/2 ||x+ - x_k||^2 + eps/2,
/// then x_{k+1} = x+ and L_{k+1} = M / gamma. One oracle call per trial; the
/// answer at the accepted x+ is reused by the next iteration.
struct NsPgmState {
  std::size_t k = 0;
  DenseVector x, gradient;
  double value = 0.0;
  double lipschitz = 0.0;
  double accepted_m = 0.0;
  std::size_t last_trials = 0;
  std::size_t oracle_calls = 0;
  std::size_t init_oracle_calls = 0;
  double epsilon = 1e-10;
  double gamma = 2.0;
  std::size_t max_trials = 60;
  bool stationary = false;
};

NsPgmState nspgm_initialize(const CompositeProblem& problem, DenseVector x0,
                            const NsPgmOptions& options);

NsPgmState nspgm_iterate(NsPgmState state, const CompositeProblem& problem);

bool nspgm_accepts(double f_x, double f_plus, const DenseVector& g_x, const DenseVector& x,
                   const DenseVector& x_plus, double m, double epsilon);

class NsPgmMethod final : public IterativeMethod {
 public:
  NsPgmMethod(std::shared_ptr<const CompositeProblem> problem, DenseVector x0,
              NsPgmOptions options = {});

  std::string name() const override { return "NS-PGM"; }
  void step() override;
  bool finished() const override { return state_.stationary; }
  std::size_t iteration() const override { return state_.k; }
  std::size_t oracle_calls() const override { return state_.oracle_calls; }
  std::size_t init_oracle_calls() const override { return state_.init_oracle_calls; }
  DenseVector solution() const override { return state_.x; }
  IterationReport report() const override;

  const NsPgmState& state() const noexcept { return state_; }

 private:
  std::shared_ptr<const CompositeProblem> problem_;
  NsPgmState state_;
};

}  // namespace acfgm
