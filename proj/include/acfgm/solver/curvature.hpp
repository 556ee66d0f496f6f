#pragma once

#include "acfgm/core/dense_vector.hpp"

namespace acfgm {

/// ||g1 - g0|| / ||x1 - x0||. Throws InvalidState when x0 == x1.
double curvature_first(const DenseVector& x0, const DenseVector& x1, const DenseVector& g0,
                       const DenseVector& g1);

/// f_prev - f_cur - <g_cur, x_prev - x_cur>. Nonnegative for convex f up to roundoff.
double bregman_gap(double f_prev, double f_cur, const DenseVector& g_cur,
                   const DenseVector& x_prev, const DenseVector& x_cur);

/// ||g_cur - g_prev||^2 / (2 B) with B = bregman_gap(...); 0 when B <= 0
/// (a negative B is roundoff and is clamped).
double curvature_smooth(double f_prev, double f_cur, const DenseVector& g_prev,
                        const DenseVector& g_cur, const DenseVector& x_prev,
                        const DenseVector& x_cur);

/// First-step constant regularized by epsilon:
/// (sqrt(d^2 G^2 + (eps/4)^2) - eps/4) / d^2 with d = ||x1 - x0||, G = ||g1 - g0||.
/// Evaluated as G^2 / (hypot(dG, eps/4) + eps/4) to avoid cancellation.
/// Throws InvalidState when x0 == x1.
double curvature_hoelder_first(double epsilon, const DenseVector& x0, const DenseVector& x1,
                               const DenseVector& g0, const DenseVector& g1);

/// ||g_cur - g_prev||^2 / (2 B + epsilon / tau) for t >= 2; B clamped at 0.
double curvature_hoelder(double epsilon, double tau, double f_prev, double f_cur,
                         const DenseVector& g_prev, const DenseVector& g_cur,
                         const DenseVector& x_prev, const DenseVector& x_cur);

}  // namespace acfgm
