#pragma once

#include <cstddef>
#include <optional>

#include "acfgm/solver/acfgm.hpp"
#include "acfgm/solver/config.hpp"

namespace acfgm {

/// Realized run quantities the closed-form bounds depend on.
struct CertificateInputs {
  PolicyKind policy = SimplePolicy{};
  std::size_t k = 0;
  double beta = default_beta();
  double eta1 = 0.0;
  double eta2 = 0.0;
  double curvature_first = 0.0;  // L_1, or its epsilon-regularized form
  double first_step_sq = 0.0;    // ||z_1 - z_0||^2
  double distance_sq = 0.0;      // ||z_0 - x*||^2 or a surrogate
  double hat_curvature = 0.0;    // hatL_k
  double simple_weight_sum = 0.0;
  double adaptive_weight_sum = 0.0;
  double eta_sum = 0.0;  // sum_{t=2}^{k+1} eta_t
};

/// Upper bounds on Psi(.) - Psi* at x_k and at the averaged iterate.
///
/// With D = ||z_0 - x*||^2, S = ||z_1 - z_0||^2 and
///   C = D / beta + max{0, eta_2 (5 L_1 / 2 - 1 / eta_1)} S
/// the smooth bounds are
///   simple:   12 hatL_k / (k (k+1)) C           and  C / sum_{s<=k} (s+1) / (6 hatL_s)
///   adaptive: 12 hatL_k / ((a k+4-2a)(a k+3-2a)) C  and  6 C / sum_{t<=k} (3 + a (t-2)) / hatL_t
/// and the Hoelder bound, valid for the averaged iterate only, is
///   [D / (2 beta) + max{0, 5 eta_2 L_1 / 4 - eta_2 / (2 eta_1)} S] / sum_{t=2}^{k+1} eta_t + eps/2.
/// Hoelder mode combined with adaptive alpha = 0 carries no bound.
struct Certificate {
  std::optional<double> bound_last_iterate;
  std::optional<double> bound_avg_iterate;
  CertificateInputs inputs;
};

Certificate certificate(const CertificateInputs& inputs);

/// Collects the inputs from a run state. Throws InvalidState before iteration 1.
CertificateInputs certificate_inputs(const SolverState& state, const PolicyKind& policy,
                                     double distance_sq);

Certificate certificate(const SolverState& state, const PolicyKind& policy, double distance_sq);

}  // namespace acfgm
