#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "acfgm/core/dense_vector.hpp"
#include "acfgm/core/prox.hpp"

namespace acfgm {

/// One first-order oracle answer: f(x) and an element of its (sub)differential.
struct SmoothEval {
  double value = 0.0;
  DenseVector gradient;
};

using SmoothOracle = std::function<SmoothEval(const DenseVector&)>;
using SmoothValue = std::function<double(const DenseVector&)>;

/// Psi(x) = f(x) + h(x) with f behind a first-order oracle and h prox-friendly.
///
/// The oracle must be deterministic and safe to call concurrently. `value`
/// is an optional cheaper f-only evaluator used for reporting objectives of
/// points the solver did not query; it is never counted as an oracle call.
class CompositeProblem {
 public:
  CompositeProblem(std::size_t dimension, SmoothOracle oracle, ProxTerm term,
                   std::string name = {}, SmoothValue value = {});

  std::size_t dimension() const noexcept { return dimension_; }
  const ProxTerm& prox_term() const noexcept { return term_; }
  const std::string& name() const noexcept { return name_; }

  /// Oracle call. Throws InvalidInput on a wrong-length input or gradient,
  /// NumericError on a non-finite value or gradient.
  SmoothEval evaluate(const DenseVector& x) const;

  /// f(x) for reporting.
  double smooth_value(const DenseVector& x) const;

  /// Psi(x) for reporting.
  double objective(const DenseVector& x) const { return smooth_value(x) + term_.evaluate(x); }

 private:
  std::size_t dimension_;
  SmoothOracle oracle_;
  ProxTerm term_;
  std::string name_;
  SmoothValue value_;
};

/// problem.evaluate(x), with NumericError turned into Diverged at `iteration`.
SmoothEval evaluate_or_diverge(const CompositeProblem& problem, const DenseVector& x,
                               std::size_t iteration);

}  // namespace acfgm
