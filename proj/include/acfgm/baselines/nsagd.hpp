#pragma once

#include <cstddef>
#include <memory>

#include "acfgm/core/method.hpp"
#include "acfgm/core/problem.hpp"

namespace acfgm {

struct NsAgdOptions {
  double lipschitz = 1.0;  // global L, required
  bool accelerate = true;
};

/// Nesterov's accelerated gradient method in three-sequence form:
///   x_t = (1 - q_t) y_{t-1} + q_t z_{t-1}
///   z_t = prox(h, z_{t-1}, g(x_t), eta_t)
///   y_t = (1 - alpha_t) y_{t-1} + alpha_t z_t
/// with q_t = alpha_t = 2/(t+1) and eta_t = t/(2L). With accelerate = false,
/// q_t = alpha_t = 1 and eta_t = 1/L: fixed-step proximal gradient descent.
/// One oracle call per iteration; y_t is the reported solution.
struct NsAgdState {
  std::size_t t = 0;
  DenseVector x, y, z;
  double lipschitz = 1.0;
  bool accelerate = true;
  double eta = 0.0;
  std::size_t oracle_calls = 0;
};

NsAgdState nsagd_initialize(const CompositeProblem& problem, DenseVector x0,
                            const NsAgdOptions& options);

NsAgdState nsagd_iterate(NsAgdState state, const CompositeProblem& problem);

class NsAgdMethod final : public IterativeMethod {
 public:
  NsAgdMethod(std::shared_ptr<const CompositeProblem> problem, DenseVector x0,
              NsAgdOptions options);

  std::string name() const override { return state_.accelerate ? "NS-AGD" : "GD"; }
  void step() override;
  bool finished() const override { return false; }
  std::size_t iteration() const override { return state_.t; }
  std::size_t oracle_calls() const override { return state_.oracle_calls; }
  std::size_t init_oracle_calls() const override { return 0; }
  DenseVector solution() const override { return state_.y; }
  IterationReport report() const override;

  const NsAgdState& state() const noexcept { return state_; }

 private:
  std::shared_ptr<const CompositeProblem> problem_;
  NsAgdState state_;
};

}  // namespace acfgm
