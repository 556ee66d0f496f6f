#include "acfgm/core/prox.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "acfgm/core/errors.hpp"

namespace acfgm {

ProxTerm ProxTerm::l1(double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw InvalidInput("L1 term needs lambda >= 0");
  return ProxTerm(L1Term{lambda});
}

ProxTerm ProxTerm::ball(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw InvalidInput("ball radius must be > 0");
  return ProxTerm(BallIndicator{radius});
}

double ProxTerm::evaluate(const DenseVector& x) const {
  if (const auto* l1 = std::get_if<L1Term>(&kind_)) return l1->lambda * norm_l1(x);
  if (const auto* ball = std::get_if<BallIndicator>(&kind_)) {
    return norm(x) <= ball->radius * (1.0 + 1e-12) ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return 0.0;
}

double soft_threshold(double v, double threshold) {
  if (v > threshold) return v - threshold;
  if (v < -threshold) return v + threshold;
  return 0.0;
}

DenseVector prox_step(const ProxTerm& term, const DenseVector& center, const DenseVector& slope,
                      double stepsize) {
  require_same_size(center, slope, "prox_step");
  if (!(stepsize > 0.0) || !std::isfinite(stepsize)) {
    throw InvalidInput("prox_step: stepsize must be positive and finite");
  }
  const std::size_t n = center.size();
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = center[i] - stepsize * slope[i];

  if (const auto* l1 = std::get_if<L1Term>(&term.kind())) {
    const double thr = stepsize * l1->lambda;
    for (double& vi : v) vi = soft_threshold(vi, thr);
  } else if (const auto* ball = std::get_if<BallIndicator>(&term.kind())) {
    double nrm = 0.0;
    for (double vi : v) nrm += vi * vi;
    nrm = std::sqrt(nrm);
    if (nrm > ball->radius) {
      const double s = ball->radius / nrm;
      for (double& vi : v) vi *= s;
    }
  }
  return DenseVector(std::move(v));
}

double prox_objective(const ProxTerm& term, const DenseVector& center, const DenseVector& slope,
                      double stepsize, const DenseVector& z) {
  return stepsize * (dot(slope, z) + term.evaluate(z)) + 0.5 * distance_sq(center, z);
}

}  // namespace acfgm
