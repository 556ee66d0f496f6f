#include "acfgm/solver/schedule.hpp"

#include <cmath>

#include "acfgm/core/errors.hpp"
#include "acfgm/solver/stepsize.hpp"

namespace acfgm {

std::vector<ScheduleViolation> validate_schedule(const std::vector<double>& eta,
                                                 const std::vector<double>& tau,
                                                 const std::vector<double>& curvature, double beta,
                                                 double relative_slack) {
  if (eta.size() != tau.size() || eta.size() != curvature.size()) {
    throw InvalidInput("validate_schedule: histories differ in length");
  }
  std::vector<ScheduleViolation> out;
  if (eta.empty()) return out;

  auto check = [&](std::size_t t, const char* name, double value, double limit) {
    if (value > limit * (1.0 + relative_slack)) out.push_back({t, name, value, limit});
  };

  if (tau[0] != 0.0) out.push_back({1, "tau_1", tau[0], 0.0});
  if (eta.size() >= 2) {
    check(2, "eta_2 growth", eta[1], (1.0 - beta) * eta[0]);
    check(2, "eta_2 curvature", eta[1], divide_or_inf(0.25, curvature[0]));
  }
  const double growth = 2.0 * (1.0 - beta) * (1.0 - beta);
  for (std::size_t i = 2; i < eta.size(); ++i) {
    const std::size_t t = i + 1;
    check(t, "growth", eta[i], growth * eta[i - 1]);
    check(t, "curvature", eta[i], divide_or_inf(tau[i - 1] / 4.0, curvature[i - 1]));
    check(t, "weight", eta[i], (tau[i - 2] + 1.0) / tau[i - 1] * eta[i - 1]);
  }
  return out;
}

}  // namespace acfgm
