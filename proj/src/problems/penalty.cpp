#include "acfgm/problems/penalty.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "acfgm/core/errors.hpp"

namespace acfgm {

PenaltySpec parse_penalty(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ConfigError("penalty '" + text + "' must be <family>:<c>");
  const std::string family = text.substr(0, colon);
  const std::string value = text.substr(colon + 1);
  PenaltySpec spec;
  if (family == "lasso") {
    spec.family = PenaltyFamily::LassoFrac;
  } else if (family == "sqrt_lasso") {
    spec.family = PenaltyFamily::SqrtLassoQuantile;
  } else if (family == "sup") {
    spec.family = PenaltyFamily::SupNormFrac;
  } else {
    throw ConfigError("unknown penalty family '" + family + "'");
  }
  const auto res = std::from_chars(value.data(), value.data() + value.size(), spec.c);
  if (value.empty() || res.ec != std::errc() || res.ptr != value.data() + value.size()) {
    throw ConfigError("penalty constant '" + value + "' is not a number");
  }
  if (!(spec.c > 0.0) || !std::isfinite(spec.c)) throw ConfigError("penalty constant must be > 0");
  return spec;
}

std::string to_string(const PenaltySpec& spec) {
  std::ostringstream os;
  os.precision(17);
  switch (spec.family) {
    case PenaltyFamily::LassoFrac: os << "lasso:"; break;
    case PenaltyFamily::SqrtLassoQuantile: os << "sqrt_lasso:"; break;
    case PenaltyFamily::SupNormFrac: os << "sup:"; break;
  }
  os << spec.c;
  return os.str();
}

double resolve_penalty(const PenaltySpec& spec, const Dataset& data) {
  if (!(spec.c > 0.0)) throw ConfigError("penalty constant must be > 0");
  validate(data);
  const std::size_t m = data.rows();
  const std::size_t n = data.cols();
  if (m == 0 || n == 0) throw ConfigError("penalty needs a nonempty dataset");
  switch (spec.family) {
    case PenaltyFamily::LassoFrac:
      return spec.c / static_cast<double>(m) * norm_inf(matvec_t(data.a, data.b));
    case PenaltyFamily::SupNormFrac:
      return spec.c * norm_inf(matvec_t(data.a, data.b));
    case PenaltyFamily::SqrtLassoQuantile:
      return spec.c / std::sqrt(static_cast<double>(m)) *
             normal_quantile(1.0 - 0.01 / static_cast<double>(n));
  }
  throw ConfigError("unknown penalty family");
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw InvalidInput("normal_quantile: p must lie in (0, 1)");
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  // Halley refinement; above 0.5 the residual uses the exact complement 1 - p
  const double e = p > 0.5 ? (1.0 - p) - 0.5 * std::erfc(x / std::sqrt(2.0)) : normal_cdf(x) - p;
  const double u = e * std::sqrt(2.0 * M_PI) * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

}  // namespace acfgm
