#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace acfgm {

struct ScheduleViolation {
  std::size_t iteration = 0;
  std::string condition;
  double value = 0.0;  // eta_t (or tau_1)
  double limit = 0.0;
};

/// Checks a recorded schedule (index 0 holds t = 1) against
///   tau_1 = 0
///   eta_2 <= (1-beta) eta_1,  eta_2 <= 1/(4 L_1)
///   eta_t <= 2 (1-beta)^2 eta_{t-1}                    ("growth")
///   eta_t <= tau_{t-1} / (4 L_{t-1})                   ("curvature")
///   eta_t <= (tau_{t-2}+1) / tau_{t-1} eta_{t-1}       ("weight"), t >= 3.
/// Pass the epsilon-regularized constants for a Hoelder run. A value within
/// `relative_slack` of its limit counts as conforming, since several limits
/// are attained exactly in exact arithmetic.
std::vector<ScheduleViolation> validate_schedule(const std::vector<double>& eta,
                                                 const std::vector<double>& tau,
                                                 const std::vector<double>& curvature, double beta,
                                                 double relative_slack = 1e-12);

}  // namespace acfgm
