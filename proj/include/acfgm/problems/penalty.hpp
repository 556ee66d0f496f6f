#pragma once

#include <string>

#include "acfgm/problems/dataset.hpp"

namespace acfgm {

enum class PenaltyFamily {
  LassoFrac,          // lambda = (c/m) ||A^T b||_inf
  SqrtLassoQuantile,  // lambda = c m^{-1/2} Phi^{-1}(1 - 0.01/n)
  SupNormFrac,        // lambda = c ||A^T b||_inf
};

struct PenaltySpec {
  PenaltyFamily family = PenaltyFamily::LassoFrac;
  double c = 0.01;
};

/// Parses "lasso:<c>", "sqrt_lasso:<c>", "sup:<c>". Throws ConfigError.
PenaltySpec parse_penalty(const std::string& text);
std::string to_string(const PenaltySpec& spec);

/// Throws ConfigError for c <= 0 or an empty dataset.
double resolve_penalty(const PenaltySpec& spec, const Dataset& data);

/// Standard normal CDF, 0.5 erfc(-x / sqrt 2).
double normal_cdf(double x);

/// Standard normal quantile for p in (0, 1): rational approximation refined
/// by one Halley step against normal_cdf. Throws InvalidInput otherwise.
double normal_quantile(double p);

}  // namespace acfgm
