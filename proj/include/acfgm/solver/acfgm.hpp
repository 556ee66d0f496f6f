#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "acfgm/core/method.hpp"
#include "acfgm/core/problem.hpp"
#include "acfgm/solver/config.hpp"
#include "acfgm/solver/initial_step.hpp"

namespace acfgm {

/// Complete state of an AC-FGM run after `t` iterations.
///
/// Iteration t computes
///   z_t = prox(h, y_{t-1}, g(x_{t-1}), eta_t)
///   y_t = (1 - beta_t) y_{t-1} + beta_t z_t          (beta_1 = 0)
///   x_t = (z_t + tau_t x_{t-1}) / (1 + tau_t)         (tau_1 = 0)
/// then queries the oracle once at x_t, updates the local curvature and
/// schedules (eta_{t+1}, tau_{t+1}) eagerly so the averaged iterate is
/// available at any stopping point.
struct SolverState {
  std::size_t t = 0;
  double beta = default_beta();

  DenseVector z0;
  DenseVector z, y, x;
  DenseVector gradient;  // g(x_t)
  double value = 0.0;    // f(x_t)
  DenseVector x_prev;    // x_{t-1}

  double eta1 = 0.0;
  double eta2 = 0.0;
  double eta_cur = 0.0;  // eta_t
  double tau_cur = 0.0;  // tau_t
  double tau_prev = 0.0;  // tau_{t-1}
  double eta_next = 0.0;  // eta_{t+1}
  double tau_next = 0.0;  // tau_{t+1}

  double curvature_first = 0.0;  // L_1
  double first_step_sq = 0.0;    // ||z_1 - z_0||^2
  double curvature_last = 0.0;   // L_t
  double hat_curvature = 0.0;    // max{1/(4(1-beta)eta_1), L_1, ..., L_t}

  DenseVector avg_finalized;  // sum_{s<t} w_s x_s
  double avg_den = 0.0;       // sum_{s=2}^{t+1} eta_s

  double simple_weight_sum = 0.0;    // sum_{s=1}^{t} (s+1) / (6 hatL_s)
  double adaptive_weight_sum = 0.0;  // sum_{s=1}^{t} (3 + alpha (s-2)) / hatL_s

  std::size_t oracle_calls = 0;
  std::size_t init_oracle_calls = 0;
  double l0 = 0.0;
  std::size_t init_trials = 0;

  std::optional<FirstIterate> first;  // precomputed by the first-iteration line search
  bool first_call_pending = false;
  bool stationary = false;  // z_1 == z_0: the start point solves the problem
};

/// Evaluates g(z0), chooses eta_1 and returns the state at t = 0.
SolverState initialize(const CompositeProblem& problem, DenseVector z0, const SolverConfig& config);

/// One AC-FGM iteration (exactly one oracle call). Throws Diverged carrying
/// the iteration index on non-finite oracle output.
SolverState acfgm_iterate(SolverState state, const CompositeProblem& problem,
                          const PolicyKind& policy);

/// Weighted average
///   [sum_{t<k} ((tau_t+1) eta_{t+1} - tau_{t+1} eta_{t+2}) x_t + (tau_k+1) eta_{k+1} x_k]
///   / sum_{t=2}^{k+1} eta_t
/// Throws InvalidState before the first iteration.
DenseVector averaged_iterate(const SolverState& state);

/// Weight currently attached to x_t in the averaged iterate.
double pending_average_weight(const SolverState& state);

/// Per-iteration schedule values, index 0 holds t = 1.
struct ScheduleHistory {
  std::vector<double> eta;
  std::vector<double> tau;
  std::vector<double> curvature;
  std::vector<double> hat_curvature;
};

/// IterativeMethod adapter.
class AcFgmMethod final : public IterativeMethod {
 public:
  AcFgmMethod(std::shared_ptr<const CompositeProblem> problem, DenseVector z0,
              SolverConfig config, bool record_history = false);

  std::string name() const override { return "AC-FGM"; }
  void step() override;
  bool finished() const override { return state_.stationary; }
  std::size_t iteration() const override { return state_.t; }
  std::size_t oracle_calls() const override { return state_.oracle_calls; }
  std::size_t init_oracle_calls() const override { return state_.init_oracle_calls; }

  /// x_t, or the averaged iterate in Hoelder mode.
  DenseVector solution() const override;
  IterationReport report() const override;

  const SolverState& state() const noexcept { return state_; }
  const SolverConfig& config() const noexcept { return config_; }
  const ScheduleHistory& history() const noexcept { return history_; }
  bool hoelder_mode() const noexcept;

 private:
  std::shared_ptr<const CompositeProblem> problem_;
  SolverConfig config_;
  SolverState state_;
  bool record_history_;
  ScheduleHistory history_;
};

}  // namespace acfgm
