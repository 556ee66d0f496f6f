#include "acfgm/solver/curvature.hpp"

#include <cmath>

#include "acfgm/core/errors.hpp"

namespace acfgm {

double curvature_first(const DenseVector& x0, const DenseVector& x1, const DenseVector& g0,
                       const DenseVector& g1) {
  require_same_size(g0, g1, "curvature_first");
  const double dx = std::sqrt(distance_sq(x0, x1));
  if (dx == 0.0) throw InvalidState("curvature_first: x1 coincides with x0");
  const double dg = std::sqrt(distance_sq(g0, g1));
  return dg / dx;
}

double bregman_gap(double f_prev, double f_cur, const DenseVector& g_cur,
                   const DenseVector& x_prev, const DenseVector& x_cur) {
  require_same_size(x_prev, x_cur, "bregman_gap");
  require_same_size(g_cur, x_cur, "bregman_gap");
  double inner = 0.0;
  for (std::size_t i = 0; i < x_cur.size(); ++i) inner += g_cur[i] * (x_prev[i] - x_cur[i]);
  return f_prev - f_cur - inner;
}

double curvature_smooth(double f_prev, double f_cur, const DenseVector& g_prev,
                        const DenseVector& g_cur, const DenseVector& x_prev,
                        const DenseVector& x_cur) {
  require_same_size(g_prev, g_cur, "curvature_smooth");
  const double b = bregman_gap(f_prev, f_cur, g_cur, x_prev, x_cur);
  if (!(b > 0.0)) return 0.0;
  return distance_sq(g_cur, g_prev) / (2.0 * b);
}

double curvature_hoelder_first(double epsilon, const DenseVector& x0, const DenseVector& x1,
                               const DenseVector& g0, const DenseVector& g1) {
  if (!(epsilon >= 0.0)) throw InvalidInput("curvature_hoelder_first: epsilon must be >= 0");
  require_same_size(g0, g1, "curvature_hoelder_first");
  const double d = std::sqrt(distance_sq(x0, x1));
  if (d == 0.0) throw InvalidState("curvature_hoelder_first: x1 coincides with x0");
  const double g_sq = distance_sq(g0, g1);
  if (g_sq == 0.0) return 0.0;
  const double c = epsilon / 4.0;
  return g_sq / (std::hypot(d * std::sqrt(g_sq), c) + c);
}

double curvature_hoelder(double epsilon, double tau, double f_prev, double f_cur,
                         const DenseVector& g_prev, const DenseVector& g_cur,
                         const DenseVector& x_prev, const DenseVector& x_cur) {
  if (!(epsilon > 0.0)) throw InvalidInput("curvature_hoelder: epsilon must be > 0");
  if (!(tau > 0.0)) throw InvalidInput("curvature_hoelder: tau must be > 0");
  require_same_size(g_prev, g_cur, "curvature_hoelder");
  const double b = std::max(0.0, bregman_gap(f_prev, f_cur, g_cur, x_prev, x_cur));
  return distance_sq(g_cur, g_prev) / (2.0 * b + epsilon / tau);
}

}  // namespace acfgm
