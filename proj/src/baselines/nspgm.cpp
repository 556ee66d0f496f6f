#include "acfgm/baselines/nspgm.hpp"

#include "acfgm/core/errors.hpp"
#include "acfgm/solver/initial_step.hpp"

namespace acfgm {

bool nspgm_accepts(double f_x, double f_plus, const DenseVector& g_x, const DenseVector& x,
                   const DenseVector& x_plus, double m, double epsilon) {
  const DenseVector d = x_plus - x;
  return f_plus <= f_x + dot(g_x, d) + 0.5 * m * norm_sq(d) + 0.5 * epsilon;
}

NsPgmState nspgm_initialize(const CompositeProblem& problem, DenseVector x0,
                            const NsPgmOptions& options) {
  if (!(options.gamma > 1.0)) throw ConfigError("NS-PGM gamma must be > 1");
  if (!(options.epsilon > 0.0)) throw ConfigError("NS-PGM epsilon must be > 0");
  if (options.max_trials == 0) throw ConfigError("NS-PGM needs at least one trial");
  if (x0.size() != problem.dimension()) throw InvalidInput("x0 has wrong dimension");

  NsPgmState s;
  SmoothEval e0 = evaluate_or_diverge(problem, x0, 0);
  s.oracle_calls = 1;
  if (options.initial_lipschitz) {
    if (!(*options.initial_lipschitz > 0.0)) throw ConfigError("initial Lipschitz guess must be > 0");
    s.lipschitz = *options.initial_lipschitz;
  } else {
    const ProbeEstimate est = estimate_l0(problem, x0, e0, std::nullopt, options.probe);
    s.oracle_calls += est.oracle_calls;
    s.lipschitz = est.l0;
  }
  s.init_oracle_calls = s.oracle_calls;
  s.x = std::move(x0);
  s.gradient = std::move(e0.gradient);
  s.value = e0.value;
  s.epsilon = options.epsilon;
  s.gamma = options.gamma;
  s.max_trials = options.max_trials;
  return s;
}

NsPgmState nspgm_iterate(NsPgmState s, const CompositeProblem& problem) {
  if (s.stationary) throw InvalidState("nspgm_iterate: run already terminated");
  const std::size_t k = s.k + 1;
  double m = s.lipschitz;
  for (std::size_t i = 0; i < s.max_trials; ++i, m *= s.gamma) {
    DenseVector x_plus = prox_step(problem.prox_term(), s.x, s.gradient, 1.0 / m);
    if (x_plus == s.x) {
      s.stationary = true;
      s.k = k;
      return s;
    }
    SmoothEval e = evaluate_or_diverge(problem, x_plus, k);
    ++s.oracle_calls;
    if (nspgm_accepts(s.value, e.value, s.gradient, s.x, x_plus, m, s.epsilon)) {
      s.x = std::move(x_plus);
      s.gradient = std::move(e.gradient);
      s.value = e.value;
      s.accepted_m = m;
      s.lipschitz = m / s.gamma;
      s.last_trials = i + 1;
      s.k = k;
      return s;
    }
  }
  throw Diverged("NS-PGM line search exceeded " + std::to_string(s.max_trials) + " trials", k,
                 s.max_trials);
}

NsPgmMethod::NsPgmMethod(std::shared_ptr<const CompositeProblem> problem, DenseVector x0,
                         NsPgmOptions options)
    : problem_(std::move(problem)) {
  if (!problem_) throw InvalidInput("NsPgmMethod: null problem");
  state_ = nspgm_initialize(*problem_, std::move(x0), options);
}

void NsPgmMethod::step() {
  const std::size_t k = state_.k + 1;
  try {
    state_ = nspgm_iterate(state_, *problem_);
  } catch (const NumericError& e) {
    throw Diverged(std::string("non-finite iterate: ") + e.what(), k);
  }
}

IterationReport NsPgmMethod::report() const {
  IterationReport r;
  r.iteration = state_.k;
  r.oracle_calls = state_.oracle_calls;
  r.objective = state_.value + problem_->prox_term().evaluate(state_.x);
  if (state_.k > 0) {
    r.eta = 1.0 / state_.accepted_m;
    r.local_curvature = state_.accepted_m;
  }
  return r;
}

}  // namespace acfgm
