#pragma once

#include <cstddef>
#include <optional>

#include "acfgm/core/problem.hpp"
#include "acfgm/solver/config.hpp"

namespace acfgm {

struct ProbeEstimate {
  double l0 = 0.0;
  std::size_t oracle_calls = 0;
  bool floored = false;  // no usable probe found, l0 is the configured floor
};

/// L0 = ||g(z_{-1}) - g(z0)|| / ||z_{-1} - z0|| (or its epsilon-regularized
/// form when epsilon is set). `eval0` is the already-computed oracle answer
/// at z0. With no explicit probe, z_{-1} = z0 + delta e_1 and delta grows 10x
/// per retry while the gradient difference is zero; after the retries the
/// floor is used.
ProbeEstimate estimate_l0(const CompositeProblem& problem, const DenseVector& z0,
                          const SmoothEval& eval0, const std::optional<DenseVector>& probe,
                          const ProbeOptions& options, std::optional<double> epsilon = {});

/// First iterate produced by the line search, reused by iteration 1.
struct FirstIterate {
  DenseVector z1;
  SmoothEval eval;
  double curvature = 0.0;  // L1 (or its epsilon-regularized form)
};

struct InitialStep {
  double eta1 = 0.0;
  double l0 = 0.0;
  std::optional<FirstIterate> first;
  std::size_t oracle_calls = 0;  // calls made here, probe and trials included
  std::size_t trials = 0;
};

/// Picks eta_1 according to the strategy. Throws Diverged when the first
/// iteration line search exceeds its trial cap.
InitialStep initial_stepsize(const InitStrategy& strategy, const CompositeProblem& problem,
                             const DenseVector& z0, const SmoothEval& eval0,
                             const PolicyKind& policy, double beta, const ProbeOptions& probe);

}  // namespace acfgm
