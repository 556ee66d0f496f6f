#include "acfgm/baselines/nsagd.hpp"

#include <cmath>

#include "acfgm/core/errors.hpp"

namespace acfgm {

NsAgdState nsagd_initialize(const CompositeProblem& problem, DenseVector x0,
                            const NsAgdOptions& options) {
  if (!(options.lipschitz > 0.0) || !std::isfinite(options.lipschitz)) {
    throw ConfigError("NS-AGD needs a Lipschitz constant > 0");
  }
  if (x0.size() != problem.dimension()) throw InvalidInput("x0 has wrong dimension");
  NsAgdState s;
  s.x = x0;
  s.y = x0;
  s.z = std::move(x0);
  s.lipschitz = options.lipschitz;
  s.accelerate = options.accelerate;
  return s;
}

NsAgdState nsagd_iterate(NsAgdState s, const CompositeProblem& problem) {
  const std::size_t t = s.t + 1;
  const double td = static_cast<double>(t);
  const double q = s.accelerate ? 2.0 / (td + 1.0) : 1.0;
  const double eta = s.accelerate ? td / (2.0 * s.lipschitz) : 1.0 / s.lipschitz;
  s.x = combine(1.0 - q, s.y, q, s.z);
  const SmoothEval e = evaluate_or_diverge(problem, s.x, t);
  ++s.oracle_calls;
  s.z = prox_step(problem.prox_term(), s.z, e.gradient, eta);
  s.y = combine(1.0 - q, s.y, q, s.z);
  s.eta = eta;
  s.t = t;
  return s;
}

NsAgdMethod::NsAgdMethod(std::shared_ptr<const CompositeProblem> problem, DenseVector x0,
                         NsAgdOptions options)
    : problem_(std::move(problem)) {
  if (!problem_) throw InvalidInput("NsAgdMethod: null problem");
  state_ = nsagd_initialize(*problem_, std::move(x0), options);
}

void NsAgdMethod::step() {
  const std::size_t t = state_.t + 1;
  try {
    state_ = nsagd_iterate(state_, *problem_);
  } catch (const NumericError& e) {
    throw Diverged(std::string("non-finite iterate: ") + e.what(), t);
  }
}

IterationReport NsAgdMethod::report() const {
  IterationReport r;
  r.iteration = state_.t;
  r.oracle_calls = state_.oracle_calls;
  r.objective = problem_->objective(state_.y);
  if (state_.t > 0) {
    r.eta = state_.eta;
    r.local_curvature = state_.lipschitz;
  }
  return r;
}

}  // namespace acfgm
