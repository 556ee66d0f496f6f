#include "acfgm/solver/acfgm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "acfgm/core/errors.hpp"
#include "acfgm/solver/curvature.hpp"
#include "acfgm/solver/stepsize.hpp"

namespace acfgm {

namespace {

struct ScheduleChoice {
  bool adaptive = false;
  double alpha = 1.0;
  std::optional<double> epsilon;
};

ScheduleChoice schedule_of(const PolicyKind& policy) {
  ScheduleChoice c;
  if (const auto* a = std::get_if<AdaptivePolicy>(&policy)) {
    c.adaptive = true;
    c.alpha = a->alpha;
  } else if (const auto* h = std::get_if<HoelderPolicy>(&policy)) {
    c.epsilon = h->epsilon;
    if (h->alpha) {
      c.adaptive = true;
      c.alpha = *h->alpha;
    }
  }
  return c;
}

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ConfigError("alpha must lie in [0, 1]");
}

}  // namespace

void validate(const SolverConfig& config) {
  if (!(config.beta > 0.0 && config.beta <= max_beta())) {
    throw ConfigError("beta must lie in (0, 1 - sqrt(6)/3]");
  }
  if (const auto* a = std::get_if<AdaptivePolicy>(&config.policy)) check_alpha(a->alpha);
  if (const auto* h = std::get_if<HoelderPolicy>(&config.policy)) {
    if (!(h->epsilon > 0.0) || !std::isfinite(h->epsilon)) throw ConfigError("epsilon must be > 0");
    if (h->alpha) check_alpha(*h->alpha);
  }
  if (const auto* f = std::get_if<FromL0>(&config.init)) {
    if (!(f->scale > 0.0)) throw ConfigError("initial stepsize scale must be > 0");
  } else if (const auto* ls = std::get_if<FirstIterLineSearch>(&config.init)) {
    if (!(ls->gamma > 1.0)) throw ConfigError("line search gamma must be > 1");
    if (ls->max_trials == 0) throw ConfigError("line search needs at least one trial");
    if (!(ls->start_multiplier > 0.0)) throw ConfigError("start multiplier must be > 0");
  } else if (const auto* ex = std::get_if<ExplicitStep>(&config.init)) {
    if (!(ex->eta1 > 0.0) || !std::isfinite(ex->eta1)) throw ConfigError("eta1 must be > 0");
  }
  if (!(config.probe.relative_perturbation > 0.0)) throw ConfigError("probe perturbation must be > 0");
  if (!(config.probe.l0_floor > 0.0)) throw ConfigError("L0 floor must be > 0");
}

std::string policy_label(const PolicyKind& policy) {
  std::ostringstream os;
  if (std::holds_alternative<SimplePolicy>(policy)) {
    os << "simple";
  } else if (const auto* a = std::get_if<AdaptivePolicy>(&policy)) {
    os << "adaptive:" << a->alpha;
  } else {
    const auto& h = std::get<HoelderPolicy>(policy);
    os << "hoelder:" << h.epsilon;
    if (h.alpha) os << ":" << *h.alpha;
  }
  return os.str();
}

SolverState initialize(const CompositeProblem& problem, DenseVector z0, const SolverConfig& config) {
  validate(config);
  if (z0.size() != problem.dimension()) throw InvalidInput("z0 has wrong dimension");

  SolverState s;
  s.beta = config.beta;
  SmoothEval e0 = evaluate_or_diverge(problem, z0, 0);

  InitialStep init;
  try {
    init = initial_stepsize(config.init, problem, z0, e0, config.policy, config.beta, config.probe);
  } catch (const NumericError& e) {
    throw Diverged(std::string("non-finite oracle output during initialization: ") + e.what(), 0);
  }

  s.z0 = z0;
  s.z = z0;
  s.y = z0;
  s.x = z0;
  s.x_prev = z0;
  s.gradient = std::move(e0.gradient);
  s.value = e0.value;
  s.eta1 = init.eta1;
  s.eta_next = init.eta1;
  s.tau_next = 0.0;
  s.l0 = init.l0;
  s.init_trials = init.trials;
  s.avg_finalized = DenseVector(z0.size(), 0.0);

  s.first_call_pending = init.first && !(init.first->z1 == z0);
  s.first = std::move(init.first);
  // The accepted line-search trial is billed to iteration 1.
  s.init_oracle_calls = 1 + init.oracle_calls - (s.first_call_pending ? 1 : 0);
  s.oracle_calls = s.init_oracle_calls;
  return s;
}

SolverState acfgm_iterate(SolverState s, const CompositeProblem& problem, const PolicyKind& policy) {
  if (s.stationary) throw InvalidState("acfgm_iterate: run already terminated at a stationary point");
  const ScheduleChoice sched = schedule_of(policy);
  const std::size_t t = s.t + 1;
  const double beta = s.beta;

  if (t == 1) {
    const double eta = s.eta_next;
    DenseVector z1;
    SmoothEval e1;
    double l1 = 0.0;
    if (s.first) {
      z1 = s.first->z1;
      e1 = s.first->eval;
      l1 = s.first->curvature;
      s.first.reset();
    } else {
      z1 = prox_step(problem.prox_term(), s.y, s.gradient, eta);
    }
    if (z1 == s.z0) {
      s.stationary = true;
      s.t = 1;
      s.eta_cur = eta;
      return s;
    }
    if (!s.first_call_pending) {
      e1 = evaluate_or_diverge(problem, z1, t);
      l1 = sched.epsilon
               ? curvature_hoelder_first(*sched.epsilon, s.z0, z1, s.gradient, e1.gradient)
               : curvature_first(s.z0, z1, s.gradient, e1.gradient);
    }
    s.first_call_pending = false;
    ++s.oracle_calls;

    s.x_prev = s.x;
    s.z = z1;
    // y_1 = y_0 since beta_1 = 0; x_1 = z_1 since tau_1 = 0.
    s.x = z1;
    s.gradient = std::move(e1.gradient);
    s.value = e1.value;
    s.eta_cur = eta;
    s.tau_prev = 0.0;
    s.tau_cur = 0.0;
    s.curvature_first = l1;
    s.curvature_last = l1;
    s.first_step_sq = distance_sq(z1, s.z0);
    s.hat_curvature = std::max(1.0 / (4.0 * (1.0 - beta) * s.eta1), l1);
  } else {
    const double eta = s.eta_next;
    const double tau = s.tau_next;
    DenseVector z = prox_step(problem.prox_term(), s.y, s.gradient, eta);
    DenseVector y = combine(1.0 - beta, s.y, beta, z);
    DenseVector x = combine(1.0 / (1.0 + tau), z, tau / (1.0 + tau), s.x);
    SmoothEval e = evaluate_or_diverge(problem, x, t);
    ++s.oracle_calls;

    const double lt = sched.epsilon ? curvature_hoelder(*sched.epsilon, tau, s.value, e.value,
                                                        s.gradient, e.gradient, s.x, x)
                                    : curvature_smooth(s.value, e.value, s.gradient, e.gradient,
                                                       s.x, x);
    s.x_prev = std::move(s.x);
    s.z = std::move(z);
    s.y = std::move(y);
    s.x = std::move(x);
    s.gradient = std::move(e.gradient);
    s.value = e.value;
    s.tau_prev = s.tau_cur;
    s.eta_cur = eta;
    s.tau_cur = tau;
    s.curvature_last = lt;
    s.hat_curvature = std::max(s.hat_curvature, lt);
  }
  s.t = t;

  // Schedule for t + 1, computed now so the averaged iterate is queryable.
  const StepParams next =
      sched.adaptive ? stepsize_adaptive(t + 1, sched.alpha, s.eta_cur, s.tau_cur, s.tau_prev,
                                         s.curvature_last, beta)
                     : stepsize_simple(t + 1, s.eta_cur, s.curvature_last, beta);

  if (t >= 2) {
    // x_{t-1} gets its final weight (tau_{t-1}+1) eta_t - tau_t eta_{t+1}.
    const double w = (s.tau_prev + 1.0) * s.eta_cur - s.tau_cur * next.eta;
    s.avg_finalized = combine(1.0, s.avg_finalized, w, s.x_prev);
  }
  if (t == 1) s.eta2 = next.eta;
  s.eta_next = next.eta;
  s.tau_next = next.tau;
  s.avg_den += next.eta;

  const double td = static_cast<double>(t);
  s.simple_weight_sum += (td + 1.0) / (6.0 * s.hat_curvature);
  s.adaptive_weight_sum += (3.0 + sched.alpha * (td - 2.0)) / s.hat_curvature;
  return s;
}

double pending_average_weight(const SolverState& s) { return (s.tau_cur + 1.0) * s.eta_next; }

DenseVector averaged_iterate(const SolverState& s) {
  if (s.t == 0) throw InvalidState("averaged_iterate: no iteration completed");
  if (s.stationary && s.t == 1) return s.x;
  return (1.0 / s.avg_den) * combine(1.0, s.avg_finalized, pending_average_weight(s), s.x);
}

AcFgmMethod::AcFgmMethod(std::shared_ptr<const CompositeProblem> problem, DenseVector z0,
                         SolverConfig config, bool record_history)
    : problem_(std::move(problem)), config_(std::move(config)), record_history_(record_history) {
  if (!problem_) throw InvalidInput("AcFgmMethod: null problem");
  state_ = initialize(*problem_, std::move(z0), config_);
}

bool AcFgmMethod::hoelder_mode() const noexcept {
  return std::holds_alternative<HoelderPolicy>(config_.policy);
}

void AcFgmMethod::step() {
  const std::size_t t = state_.t + 1;
  try {
    state_ = acfgm_iterate(state_, *problem_, config_.policy);
  } catch (const NumericError& e) {
    throw Diverged(std::string("non-finite iterate: ") + e.what(), t);
  }
  if (record_history_ && !state_.stationary) {
    history_.eta.push_back(state_.eta_cur);
    history_.tau.push_back(state_.tau_cur);
    history_.curvature.push_back(state_.curvature_last);
    history_.hat_curvature.push_back(state_.hat_curvature);
  }
}

DenseVector AcFgmMethod::solution() const {
  if (hoelder_mode() && state_.t > 0) return averaged_iterate(state_);
  return state_.x;
}

IterationReport AcFgmMethod::report() const {
  IterationReport r;
  r.iteration = state_.t;
  r.oracle_calls = state_.oracle_calls;
  if (hoelder_mode() && state_.t > 0) {
    r.objective = problem_->objective(averaged_iterate(state_));
  } else {
    r.objective = state_.value + problem_->prox_term().evaluate(state_.x);
  }
  if (state_.t > 0) {
    r.eta = state_.eta_cur;
    r.tau = state_.tau_cur;
    r.local_curvature = state_.curvature_last;
  }
  return r;
}

}  // namespace acfgm
