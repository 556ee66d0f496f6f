#include "acfgm/solver/stepsize.hpp"

#include <algorithm>
#include <limits>

#include "acfgm/core/errors.hpp"

namespace acfgm {

double divide_or_inf(double numerator, double curvature) {
  if (curvature == 0.0) return std::numeric_limits<double>::infinity();
  return numerator / curvature;
}

StepParams stepsize_simple(std::size_t t, double eta_prev, double curvature_prev, double beta) {
  if (t < 2) throw InvalidInput("stepsize_simple: t must be >= 2");
  const double td = static_cast<double>(t);
  StepParams out;
  out.tau = td / 2.0;
  if (t == 2) {
    out.eta = std::min((1.0 - beta) * eta_prev, divide_or_inf(0.25, curvature_prev));
  } else if (t == 3) {
    out.eta = std::min(eta_prev, divide_or_inf(0.25, curvature_prev));
  } else {
    out.eta = std::min(td / (td - 1.0) * eta_prev, divide_or_inf((td - 1.0) / 8.0, curvature_prev));
  }
  return out;
}

StepParams stepsize_adaptive(std::size_t t, double alpha, double eta_prev, double tau_prev,
                             double tau_prevprev, double curvature_prev, double beta) {
  if (t < 2) throw InvalidInput("stepsize_adaptive: t must be >= 2");
  StepParams out;
  if (t == 2) {
    out.eta = std::min((1.0 - beta) * eta_prev, divide_or_inf(0.25, curvature_prev));
    out.tau = 1.0;
    return out;
  }
  out.eta = std::min({4.0 / 3.0 * eta_prev, (tau_prevprev + 1.0) / tau_prev * eta_prev,
                      divide_or_inf(tau_prev / 4.0, curvature_prev)});
  out.tau = tau_prev + alpha / 2.0 + 2.0 * (1.0 - alpha) * out.eta * curvature_prev / tau_prev;
  return out;
}

}  // namespace acfgm
