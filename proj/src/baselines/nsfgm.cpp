#include "acfgm/baselines/nsfgm.hpp"

#include <cmath>

#include "acfgm/core/errors.hpp"
#include "acfgm/solver/initial_step.hpp"

namespace acfgm {

bool nsfgm_accepts(double f_x, double f_plus, const DenseVector& g_x, const DenseVector& x,
                   const DenseVector& y_plus, double m, double epsilon, double tau) {
  const DenseVector d = y_plus - x;
  return f_plus <= f_x + dot(g_x, d) + 0.5 * m * norm_sq(d) + 0.5 * epsilon * tau;
}

NsFgmState nsfgm_initialize(const CompositeProblem& problem, DenseVector x0,
                            const NsFgmOptions& options) {
  if (!(options.gamma > 1.0)) throw ConfigError("NS-FGM gamma must be > 1");
  if (!(options.epsilon > 0.0)) throw ConfigError("NS-FGM epsilon must be > 0");
  if (options.max_trials == 0) throw ConfigError("NS-FGM needs at least one trial");
  if (x0.size() != problem.dimension()) throw InvalidInput("x0 has wrong dimension");

  NsFgmState s;
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
  s.s = DenseVector(x0.size(), 0.0);
  s.y = x0;
  s.x0 = std::move(x0);
  s.value = e0.value;
  s.epsilon = options.epsilon;
  s.gamma = options.gamma;
  s.max_trials = options.max_trials;
  return s;
}

NsFgmState nsfgm_iterate(NsFgmState s, const CompositeProblem& problem) {
  const std::size_t k = s.k + 1;
  const DenseVector v =
      s.big_a > 0.0 ? prox_step(problem.prox_term(), s.x0, (1.0 / s.big_a) * s.s, s.big_a) : s.x0;

  double m = s.lipschitz;
  for (std::size_t i = 0; i < s.max_trials; ++i, m *= s.gamma) {
    const double a = (1.0 + std::sqrt(1.0 + 4.0 * m * s.big_a)) / (2.0 * m);
    const double tau = a / (s.big_a + a);
    const DenseVector x = combine(tau, v, 1.0 - tau, s.y);
    const SmoothEval ex = evaluate_or_diverge(problem, x, k);
    const DenseVector xhat = prox_step(problem.prox_term(), v, ex.gradient, a);
    const DenseVector y_plus = combine(tau, xhat, 1.0 - tau, s.y);
    const SmoothEval ey = evaluate_or_diverge(problem, y_plus, k);
    s.oracle_calls += 2;
    if (nsfgm_accepts(ex.value, ey.value, ex.gradient, x, y_plus, m, s.epsilon, tau)) {
      s.y = y_plus;
      s.value = ey.value;
      s.s = combine(1.0, s.s, a, ex.gradient);
      s.big_a += a;
      s.accepted_m = m;
      s.lipschitz = m / s.gamma;
      s.last_a = a;
      s.last_tau = tau;
      s.last_x = x;
      s.last_eval_x = ex;
      s.last_trials = i + 1;
      s.k = k;
      return s;
    }
  }
  throw Diverged("NS-FGM line search exceeded " + std::to_string(s.max_trials) + " trials", k,
                 s.max_trials);
}

NsFgmMethod::NsFgmMethod(std::shared_ptr<const CompositeProblem> problem, DenseVector x0,
                         NsFgmOptions options)
    : problem_(std::move(problem)) {
  if (!problem_) throw InvalidInput("NsFgmMethod: null problem");
  state_ = nsfgm_initialize(*problem_, std::move(x0), options);
}

void NsFgmMethod::step() {
  const std::size_t k = state_.k + 1;
  try {
    state_ = nsfgm_iterate(state_, *problem_);
  } catch (const NumericError& e) {
    throw Diverged(std::string("non-finite iterate: ") + e.what(), k);
  }
}

IterationReport NsFgmMethod::report() const {
  IterationReport r;
  r.iteration = state_.k;
  r.oracle_calls = state_.oracle_calls;
  r.objective = state_.value + problem_->prox_term().evaluate(state_.y);
  if (state_.k > 0) {
    r.eta = state_.last_a;
    r.local_curvature = state_.accepted_m;
  }
  return r;
}

}  // namespace acfgm
