#pragma once

#include <variant>

#include "acfgm/core/dense_vector.hpp"

namespace acfgm {

struct ZeroTerm {};

/// h(x) = lambda * ||x||_1
struct L1Term {
  double lambda = 0.0;
};

/// h(x) = 0 on the closed Euclidean ball of the given radius, +inf outside.
struct BallIndicator {
  double radius = 1.0;
};

/// The prox-friendly part h of a composite objective.
class ProxTerm {
 public:
  using Kind = std::variant<ZeroTerm, L1Term, BallIndicator>;

  ProxTerm() = default;

  static ProxTerm zero() { return ProxTerm(ZeroTerm{}); }
  static ProxTerm l1(double lambda);
  static ProxTerm ball(double radius);

  const Kind& kind() const noexcept { return kind_; }

  /// h(x); +infinity for BallIndicator outside the ball (relative slack 1e-12
  /// so that projected points always evaluate to 0).
  double evaluate(const DenseVector& x) const;

 private:
  explicit ProxTerm(Kind kind) : kind_(kind) {}
  Kind kind_ = ZeroTerm{};
};

/// argmin_z { eta * (<slope, z> + h(z)) + 0.5 * ||center - z||^2 }
DenseVector prox_step(const ProxTerm& term, const DenseVector& center, const DenseVector& slope,
                      double stepsize);

/// Value of the prox subproblem objective at z. Used by tests and line searches.
double prox_objective(const ProxTerm& term, const DenseVector& center, const DenseVector& slope,
                      double stepsize, const DenseVector& z);

/// sign(v) * max(|v| - threshold, 0); exact ties map to 0.
double soft_threshold(double v, double threshold);

}  // namespace acfgm
