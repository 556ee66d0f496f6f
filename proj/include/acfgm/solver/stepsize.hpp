#pragma once

#include <cstddef>

namespace acfgm {

struct StepParams {
  double eta = 0.0;
  double tau = 0.0;
};

/// numerator / L with the convention a / 0 = +inf.
double divide_or_inf(double numerator, double curvature);

/// Simple schedule, t >= 2. eta_prev is eta_{t-1} (eta_1 when t = 2) and
/// curvature_prev is L_{t-1}. tau_t = t/2.
///   eta_2 = min{(1-beta) eta_1, 1/(4 L_1)}
///   eta_3 = min{eta_2, 1/(4 L_2)}
///   eta_t = min{t/(t-1) eta_{t-1}, (t-1)/(8 L_{t-1})},  t >= 4
StepParams stepsize_simple(std::size_t t, double eta_prev, double curvature_prev, double beta);

/// Adaptive schedule, t >= 2. tau_prev = tau_{t-1}, tau_prevprev = tau_{t-2}.
///   eta_2 = min{(1-beta) eta_1, 1/(4 L_1)}, tau_2 = 1
///   eta_t = min{4/3 eta_{t-1}, (tau_{t-2}+1)/tau_{t-1} eta_{t-1}, tau_{t-1}/(4 L_{t-1})}
///   tau_t = tau_{t-1} + alpha/2 + 2 (1-alpha) eta_t L_{t-1} / tau_{t-1}
StepParams stepsize_adaptive(std::size_t t, double alpha, double eta_prev, double tau_prev,
                             double tau_prevprev, double curvature_prev, double beta);

}  // namespace acfgm
