#include "acfgm/solver/initial_step.hpp"

#include <algorithm>
#include <cmath>

#include "acfgm/core/errors.hpp"
#include "acfgm/solver/curvature.hpp"

namespace acfgm {

namespace {

std::optional<double> hoelder_epsilon(const PolicyKind& policy) {
  if (const auto* h = std::get_if<HoelderPolicy>(&policy)) return h->epsilon;
  return std::nullopt;
}

double probe_ratio(const DenseVector& z0, const DenseVector& zp, const SmoothEval& e0,
                   const SmoothEval& ep, std::optional<double> epsilon) {
  if (epsilon) return curvature_hoelder_first(*epsilon, z0, zp, e0.gradient, ep.gradient);
  return curvature_first(z0, zp, e0.gradient, ep.gradient);
}

}  // namespace

ProbeEstimate estimate_l0(const CompositeProblem& problem, const DenseVector& z0,
                          const SmoothEval& eval0, const std::optional<DenseVector>& probe,
                          const ProbeOptions& options, std::optional<double> epsilon) {
  ProbeEstimate out;
  if (probe) {
    if (probe->size() != z0.size()) throw InvalidInput("probe has wrong dimension");
    if (*probe == z0) throw InvalidState("probe coincides with z0");
    const SmoothEval ep = problem.evaluate(*probe);
    out.oracle_calls = 1;
    out.l0 = probe_ratio(z0, *probe, eval0, ep, epsilon);
  } else {
    double delta = options.relative_perturbation * std::max(1.0, norm(z0));
    for (int attempt = 0; attempt <= options.retries; ++attempt, delta *= 10.0) {
      const DenseVector zp = z0 + DenseVector::unit(z0.size(), 0, delta);
      const SmoothEval ep = problem.evaluate(zp);
      ++out.oracle_calls;
      out.l0 = probe_ratio(z0, zp, eval0, ep, epsilon);
      if (out.l0 > 0.0) break;
    }
  }
  if (!(out.l0 > 0.0)) {
    out.l0 = options.l0_floor;
    out.floored = true;
  }
  return out;
}

InitialStep initial_stepsize(const InitStrategy& strategy, const CompositeProblem& problem,
                             const DenseVector& z0, const SmoothEval& eval0,
                             const PolicyKind& policy, double beta, const ProbeOptions& probe) {
  const auto epsilon = hoelder_epsilon(policy);
  InitialStep out;

  if (const auto* ex = std::get_if<ExplicitStep>(&strategy)) {
    out.eta1 = ex->eta1;
    return out;
  }

  if (const auto* from = std::get_if<FromL0>(&strategy)) {
    const ProbeEstimate est = estimate_l0(problem, z0, eval0, from->probe, probe, epsilon);
    out.l0 = est.l0;
    out.oracle_calls = est.oracle_calls;
    out.eta1 = from->scale / est.l0;
    return out;
  }

  const auto& ls = std::get<FirstIterLineSearch>(strategy);
  const ProbeEstimate est = estimate_l0(problem, z0, eval0, ls.probe, probe, epsilon);
  out.l0 = est.l0;
  out.oracle_calls = est.oracle_calls;

  double eta = ls.start_multiplier / (4.0 * (1.0 - beta) * est.l0);
  for (std::size_t i = 0; i < ls.max_trials; ++i, eta /= ls.gamma) {
    DenseVector z1 = prox_step(problem.prox_term(), z0, eval0.gradient, eta);
    ++out.trials;
    if (z1 == z0) {
      // Stationary start: any stepsize is accepted and the run stops at z0.
      out.eta1 = eta;
      out.first = FirstIterate{std::move(z1), eval0, 0.0};
      return out;
    }
    SmoothEval e1 = problem.evaluate(z1);
    ++out.oracle_calls;
    const double l1 = epsilon ? curvature_hoelder_first(*epsilon, z0, z1, eval0.gradient, e1.gradient)
                              : curvature_first(z0, z1, eval0.gradient, e1.gradient);
    if (l1 == 0.0 || eta <= 2.0 / (5.0 * l1)) {
      out.eta1 = eta;
      out.first = FirstIterate{std::move(z1), std::move(e1), l1};
      return out;
    }
  }
  throw Diverged("first-iteration line search exceeded " + std::to_string(ls.max_trials) +
                     " trials",
                 1, out.trials);
}

}  // namespace acfgm
