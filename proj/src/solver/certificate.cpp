#include "acfgm/solver/certificate.hpp"

#include <algorithm>
#include <cmath>

#include "acfgm/core/errors.hpp"

namespace acfgm {

namespace {

std::optional<double> finite_or_none(double v) {
  if (!std::isfinite(v)) return std::nullopt;
  return std::max(v, 0.0);
}

}  // namespace

Certificate certificate(const CertificateInputs& in) {
  if (in.k == 0) throw InvalidInput("certificate: k must be >= 1");
  if (!(in.distance_sq >= 0.0)) throw InvalidInput("certificate: distance must be >= 0");

  Certificate c;
  c.inputs = in;
  const double k = static_cast<double>(in.k);
  const double d = in.distance_sq;
  const double s = in.first_step_sq;

  if (const auto* h = std::get_if<HoelderPolicy>(&in.policy)) {
    if (h->alpha && *h->alpha == 0.0) return c;
    const double extra =
        std::max(0.0, 1.25 * in.eta2 * in.curvature_first - in.eta2 / (2.0 * in.eta1)) * s;
    c.bound_avg_iterate = finite_or_none((d / (2.0 * in.beta) + extra) / in.eta_sum + h->epsilon / 2.0);
    return c;
  }

  const double bracket =
      d / in.beta + std::max(0.0, in.eta2 * (2.5 * in.curvature_first - 1.0 / in.eta1)) * s;
  if (const auto* a = std::get_if<AdaptivePolicy>(&in.policy)) {
    const double al = a->alpha;
    c.bound_last_iterate = finite_or_none(12.0 * in.hat_curvature /
                                          ((al * k + 4.0 - 2.0 * al) * (al * k + 3.0 - 2.0 * al)) *
                                          bracket);
    c.bound_avg_iterate = finite_or_none(6.0 * bracket / in.adaptive_weight_sum);
  } else {
    c.bound_last_iterate = finite_or_none(12.0 * in.hat_curvature / (k * (k + 1.0)) * bracket);
    c.bound_avg_iterate = finite_or_none(bracket / in.simple_weight_sum);
  }
  return c;
}

CertificateInputs certificate_inputs(const SolverState& state, const PolicyKind& policy,
                                     double distance_sq) {
  if (state.t == 0) throw InvalidState("certificate: no iteration completed");
  CertificateInputs in;
  in.policy = policy;
  in.k = state.t;
  in.beta = state.beta;
  in.eta1 = state.eta1;
  in.eta2 = state.eta2;
  in.curvature_first = state.curvature_first;
  in.first_step_sq = state.first_step_sq;
  in.distance_sq = distance_sq;
  in.hat_curvature = state.hat_curvature;
  in.simple_weight_sum = state.simple_weight_sum;
  in.adaptive_weight_sum = state.adaptive_weight_sum;
  in.eta_sum = state.avg_den;
  return in;
}

Certificate certificate(const SolverState& state, const PolicyKind& policy, double distance_sq) {
  return certificate(certificate_inputs(state, policy, distance_sq));
}

}  // namespace acfgm
