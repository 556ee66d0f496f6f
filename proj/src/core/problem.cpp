#include "acfgm/core/problem.hpp"

#include <cmath>

#include "acfgm/core/errors.hpp"

namespace acfgm {

CompositeProblem::CompositeProblem(std::size_t dimension, SmoothOracle oracle, ProxTerm term,
                                   std::string name, SmoothValue value)
    : dimension_(dimension),
      oracle_(std::move(oracle)),
      term_(term),
      name_(std::move(name)),
      value_(std::move(value)) {
  if (dimension_ == 0) throw InvalidInput("problem dimension must be >= 1");
  if (!oracle_) throw InvalidInput("problem needs a smooth oracle");
}

SmoothEval CompositeProblem::evaluate(const DenseVector& x) const {
  if (x.size() != dimension_) throw InvalidInput("oracle: input has wrong dimension");
  SmoothEval out = oracle_(x);
  if (out.gradient.size() != dimension_) throw InvalidInput("oracle: gradient has wrong dimension");
  if (!std::isfinite(out.value)) throw NumericError("oracle: non-finite function value");
  return out;
}

double CompositeProblem::smooth_value(const DenseVector& x) const {
  if (x.size() != dimension_) throw InvalidInput("value: input has wrong dimension");
  if (value_) return value_(x);
  return oracle_(x).value;
}

SmoothEval evaluate_or_diverge(const CompositeProblem& problem, const DenseVector& x,
                               std::size_t iteration) {
  try {
    return problem.evaluate(x);
  } catch (const NumericError& e) {
    throw Diverged(std::string("non-finite oracle output: ") + e.what(), iteration);
  }
}

}  // namespace acfgm
