#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>

#include "acfgm/baselines/adgd.hpp"
#include "acfgm/baselines/nsagd.hpp"
#include "acfgm/baselines/nsfgm.hpp"
#include "acfgm/baselines/nspgm.hpp"

namespace acfgm {

enum class BaselineKind { AdGD, NSFGM, NSPGM, NSAGD };

/// Parses "adgd", "nsfgm", "nspgm", "nsagd" (also "ns-fgm" etc.). Throws ConfigError.
BaselineKind parse_baseline_kind(const std::string& name);
std::string to_string(BaselineKind kind);

struct BaselineConfig {
  BaselineKind method = BaselineKind::AdGD;
  std::optional<double> gamma;  // default 1.5 for AdGD, 2 for NS-FGM/NS-PGM
  double epsilon = 1e-10;       // NS-FGM / NS-PGM target accuracy
  std::optional<double> lipschitz;  // NS-AGD: required; line-search methods: initial guess
  std::size_t max_trials = 60;
  bool accelerate = true;  // NS-AGD only
  ProbeOptions probe;
};

std::unique_ptr<IterativeMethod> make_baseline(const BaselineConfig& config,
                                               std::shared_ptr<const CompositeProblem> problem,
                                               DenseVector x0);

}  // namespace acfgm
