#include "acfgm/baselines/adgd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "acfgm/core/errors.hpp"
#include "acfgm/solver/curvature.hpp"
#include "acfgm/solver/initial_step.hpp"

namespace acfgm {

AdgdState adgd_initialize(const CompositeProblem& problem, DenseVector x0,
                          const AdgdOptions& options) {
  if (!(options.gamma > 1.0)) throw ConfigError("AdGD gamma must be > 1");
  if (options.max_trials == 0) throw ConfigError("AdGD needs at least one trial");
  if (x0.size() != problem.dimension()) throw InvalidInput("x0 has wrong dimension");

  AdgdState s;
  SmoothEval e0 = evaluate_or_diverge(problem, x0, 0);
  const ProbeEstimate est = estimate_l0(problem, x0, e0, std::nullopt, options.probe);
  s.oracle_calls = 1 + est.oracle_calls;

  double lambda = 1.0 / est.l0;
  bool accepted = false;
  for (std::size_t i = 0; i < options.max_trials; ++i, lambda /= options.gamma) {
    ++s.init_trials;
    DenseVector x1 = prox_step(problem.prox_term(), x0, e0.gradient, lambda);
    if (x1 == x0) {
      s.stationary = true;
      accepted = true;
      break;
    }
    SmoothEval e1 = evaluate_or_diverge(problem, x1, 0);
    ++s.oracle_calls;
    const double l1 = curvature_first(x0, x1, e0.gradient, e1.gradient);
    if (lambda * l1 <= 0.5) {
      s.first_x = std::move(x1);
      s.first_eval = std::move(e1);
      s.first_lambda = lambda;
      s.first_pending = true;
      accepted = true;
      break;
    }
  }
  if (!accepted) {
    throw Diverged("AdGD initial stepsize search exceeded " + std::to_string(options.max_trials) +
                       " trials",
                   1, s.init_trials);
  }
  s.init_oracle_calls = s.oracle_calls - (s.first_pending ? 1 : 0);
  s.oracle_calls = s.init_oracle_calls;
  s.x = std::move(x0);
  s.gradient = std::move(e0.gradient);
  s.value = e0.value;
  s.theta = std::numeric_limits<double>::infinity();
  return s;
}

AdgdState adgd_iterate(AdgdState s, const CompositeProblem& problem) {
  if (s.stationary) throw InvalidState("adgd_iterate: run already terminated");
  const std::size_t k = s.k + 1;
  if (s.first_pending) {
    s.x_prev = std::move(s.x);
    s.gradient_prev = std::move(s.gradient);
    s.x = std::move(s.first_x);
    s.gradient = std::move(s.first_eval.gradient);
    s.value = s.first_eval.value;
    s.lambda = s.first_lambda;
    s.curvature = curvature_first(s.x_prev, s.x, s.gradient_prev, s.gradient);
    s.first_pending = false;
    ++s.oracle_calls;
    s.k = k;
    return s;
  }
  const double dx = std::sqrt(distance_sq(s.x, s.x_prev));
  const double dg = std::sqrt(distance_sq(s.gradient, s.gradient_prev));
  const double growth = std::isinf(s.theta) ? std::numeric_limits<double>::infinity()
                                            : std::sqrt(1.0 + s.theta) * s.lambda;
  const double local = dg == 0.0 ? std::numeric_limits<double>::infinity() : dx / (2.0 * dg);
  double lambda = std::min(growth, local);
  if (std::isinf(lambda)) lambda = s.lambda;  // flat first step: keep the stepsize
  s.theta = lambda / s.lambda;

  DenseVector x = prox_step(problem.prox_term(), s.x, s.gradient, lambda);
  if (x == s.x) {
    s.stationary = true;
    s.k = k;
    s.lambda = lambda;
    return s;
  }
  SmoothEval e = evaluate_or_diverge(problem, x, k);
  ++s.oracle_calls;
  s.x_prev = std::move(s.x);
  s.gradient_prev = std::move(s.gradient);
  s.x = std::move(x);
  s.gradient = std::move(e.gradient);
  s.value = e.value;
  s.lambda = lambda;
  s.curvature = curvature_first(s.x_prev, s.x, s.gradient_prev, s.gradient);
  s.k = k;
  return s;
}

AdgdMethod::AdgdMethod(std::shared_ptr<const CompositeProblem> problem, DenseVector x0,
                       AdgdOptions options)
    : problem_(std::move(problem)) {
  if (!problem_) throw InvalidInput("AdgdMethod: null problem");
  state_ = adgd_initialize(*problem_, std::move(x0), options);
}

void AdgdMethod::step() {
  const std::size_t k = state_.k + 1;
  try {
    state_ = adgd_iterate(state_, *problem_);
  } catch (const NumericError& e) {
    throw Diverged(std::string("non-finite iterate: ") + e.what(), k);
  }
}

IterationReport AdgdMethod::report() const {
  IterationReport r;
  r.iteration = state_.k;
  r.oracle_calls = state_.oracle_calls;
  r.objective = state_.value + problem_->prox_term().evaluate(state_.x);
  if (state_.k > 0) {
    r.eta = state_.lambda;
    r.local_curvature = state_.curvature;
  }
  return r;
}

}  // namespace acfgm
