#pragma once

#include <cstddef>
#include <memory>
#include <optional>

#include "acfgm/core/method.hpp"
#include "acfgm/core/problem.hpp"
#include "acfgm/solver/config.hpp"

namespace acfgm {

struct NsFgmOptions {
  double gamma = 2.0;
  double epsilon = 1e-10;
  std::size_t max_trials = 60;
  std::optional<double> initial_lipschitz;  // default: the L0 probe
  ProbeOptions probe;
};

/// Nesterov's universal fast gradient method. With A_0 = 0, s_0 = 0, y_0 = x_0
/// and an estimate L_k, each iteration tries M = gamma^i L_k, i = 0, 1, ...:
///   v    = argmin { <s_k, z> + A_k h(z) + 0.5 ||z - x_0||^2 }
///   a    = (1 + sqrt(1 + 4 M A_k)) / (2 M),  tau = a / (A_k + a)
///   x    = tau v + (1 - tau) y_k
///   xhat = prox(h, v, g(x), a)
///   y+   = tau xhat + (1 - tau) y_k
/// and accepts when
///   f(y+) <= f(x) + <g(x), y+ - x> + M/2 ||y+ - x||^2 + eps tau / 2.
/// Then y_{k+1} = y+, s_{k+1} = s_k + a g(x), A_{k+1} = A_k + a, L_{k+1} = M / gamma.
/// Each trial queries the oracle at x and at y+.
struct NsFgmState {
  std::size_t k = 0;
  DenseVector x0, y, s;
  double value = 0.0;  // f(y_k)
  double big_a = 0.0;
  double lipschitz = 0.0;  // L_k
  double accepted_m = 0.0;
  double last_a = 0.0;
  double last_tau = 0.0;
  DenseVector last_x;      // accepted trial point x
  SmoothEval last_eval_x;  // oracle answer at last_x
  std::size_t last_trials = 0;
  std::size_t oracle_calls = 0;
  std::size_t init_oracle_calls = 0;
  double epsilon = 1e-10;
  double gamma = 2.0;
  std::size_t max_trials = 60;
};

NsFgmState nsfgm_initialize(const CompositeProblem& problem, DenseVector x0,
                            const NsFgmOptions& options);

NsFgmState nsfgm_iterate(NsFgmState state, const CompositeProblem& problem);

/// True when the accepted trial satisfies the acceptance inequality; used by tests.
bool nsfgm_accepts(double f_x, double f_plus, const DenseVector& g_x, const DenseVector& x,
                   const DenseVector& y_plus, double m, double epsilon, double tau);

class NsFgmMethod final : public IterativeMethod {
 public:
  NsFgmMethod(std::shared_ptr<const CompositeProblem> problem, DenseVector x0,
              NsFgmOptions options = {});

  std::string name() const override { return "NS-FGM"; }
  void step() override;
  bool finished() const override { return false; }
  std::size_t iteration() const override { return state_.k; }
  std::size_t oracle_calls() const override { return state_.oracle_calls; }
  std::size_t init_oracle_calls() const override { return state_.init_oracle_calls; }
  DenseVector solution() const override { return state_.y; }
  IterationReport report() const override;

  const NsFgmState& state() const noexcept { return state_; }

 private:
  std::shared_ptr<const CompositeProblem> problem_;
  NsFgmState state_;
};

}  // namespace acfgm
