#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "acfgm/core/dense_vector.hpp"

namespace acfgm {

/// Snapshot a solver exposes after each iteration.
struct IterationReport {
  std::size_t iteration = 0;
  std::size_t oracle_calls = 0;  // cumulative, initialization included
  double objective = 0.0;        // Psi at the reported solution
  std::optional<double> eta;     // stepsize used in this iteration
  std::optional<double> tau;
  std::optional<double> local_curvature;
};

/// Uniform driver interface shared by AC-FGM and the baselines.
class IterativeMethod {
 public:
  virtual ~IterativeMethod() = default;

  virtual std::string name() const = 0;

  /// Advances one iteration. Throws Diverged on failure.
  virtual void step() = 0;

  /// True once the method stopped on its own (e.g. the start was stationary).
  virtual bool finished() const = 0;

  virtual std::size_t iteration() const = 0;
  virtual std::size_t oracle_calls() const = 0;
  virtual std::size_t init_oracle_calls() const = 0;

  virtual DenseVector solution() const = 0;
  virtual IterationReport report() const = 0;
};

}  // namespace acfgm
