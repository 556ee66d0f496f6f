#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "acfgm/core/dense_vector.hpp"

namespace acfgm {

/// Largest admissible prox-center weight, 1 - sqrt(6)/3. Also the default.
inline double max_beta() { return 1.0 - std::sqrt(6.0) / 3.0; }
inline double default_beta() { return max_beta(); }

/// tau_t = t/2 and the fixed growth rule eta_t <= t/(t-1) * eta_{t-1}.
struct SimplePolicy {};

/// tau_t grows between alpha/2 and 1/2 per step depending on which stepsize
/// branch binds; alpha = 1 reproduces SimplePolicy.
struct AdaptivePolicy {
  double alpha = 0.1;
};

/// Hoelder (universal) mode: local constants are regularized by the target
/// accuracy epsilon. Without alpha the simple schedule drives the stepsizes,
/// otherwise the adaptive one with that alpha.
struct HoelderPolicy {
  double epsilon = 1e-6;
  std::optional<double> alpha;
};

using PolicyKind = std::variant<SimplePolicy, AdaptivePolicy, HoelderPolicy>;

/// eta_1 = scale / L0, with L0 the gradient-difference ratio between z0 and a
/// probe z_{-1}. Probe defaults to z0 + delta * e_1. Hoelder mode uses the
/// epsilon-regularized L0.
struct FromL0 {
  std::optional<DenseVector> probe;
  double scale = 0.4;
};

/// Backtracking on the first iteration only: eta_1^(i) = m / (4 (1 - beta) L0 gamma^i)
/// until eta_1^(i) <= 2 / (5 L1^(i)). m is start_multiplier (1 by default).
struct FirstIterLineSearch {
  std::optional<DenseVector> probe;
  double gamma = 2.0;
  std::size_t max_trials = 60;
  double start_multiplier = 1.0;
};

struct ExplicitStep {
  double eta1 = 1.0;
};

using InitStrategy = std::variant<FromL0, FirstIterLineSearch, ExplicitStep>;

/// How the default probe z_{-1} is generated and what to do when the probe
/// sees zero gradient change.
struct ProbeOptions {
  double relative_perturbation = 1e-2;  // delta = rel * max(1, ||z0||)
  int retries = 3;                      // each retry multiplies delta by 10
  double l0_floor = 1e-12;
};

struct SolverConfig {
  PolicyKind policy = SimplePolicy{};
  double beta = default_beta();
  InitStrategy init = FromL0{};
  ProbeOptions probe;
};

/// Throws ConfigError for beta outside (0, 1 - sqrt(6)/3], alpha outside
/// [0, 1], epsilon <= 0, scale <= 0, gamma <= 1, eta1 <= 0.
void validate(const SolverConfig& config);

std::string policy_label(const PolicyKind& policy);

}  // namespace acfgm
