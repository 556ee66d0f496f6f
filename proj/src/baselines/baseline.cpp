#include "acfgm/baselines/baseline.hpp"

#include <algorithm>
#include <cctype>

#include "acfgm/core/errors.hpp"

namespace acfgm {

BaselineKind parse_baseline_kind(const std::string& name) {
  std::string key;
  for (char c : name) {
    if (c != '-' && c != '_') key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (key == "adgd") return BaselineKind::AdGD;
  if (key == "nsfgm") return BaselineKind::NSFGM;
  if (key == "nspgm") return BaselineKind::NSPGM;
  if (key == "nsagd") return BaselineKind::NSAGD;
  throw ConfigError("unknown baseline method '" + name + "'");
}

std::string to_string(BaselineKind kind) {
  switch (kind) {
    case BaselineKind::AdGD: return "adgd";
    case BaselineKind::NSFGM: return "nsfgm";
    case BaselineKind::NSPGM: return "nspgm";
    case BaselineKind::NSAGD: return "nsagd";
  }
  return "?";
}

std::unique_ptr<IterativeMethod> make_baseline(const BaselineConfig& config,
                                               std::shared_ptr<const CompositeProblem> problem,
                                               DenseVector x0) {
  switch (config.method) {
    case BaselineKind::AdGD: {
      AdgdOptions o;
      o.gamma = config.gamma.value_or(1.5);
      o.max_trials = config.max_trials;
      o.probe = config.probe;
      return std::make_unique<AdgdMethod>(std::move(problem), std::move(x0), o);
    }
    case BaselineKind::NSFGM: {
      NsFgmOptions o;
      o.gamma = config.gamma.value_or(2.0);
      o.epsilon = config.epsilon;
      o.max_trials = config.max_trials;
      o.initial_lipschitz = config.lipschitz;
      o.probe = config.probe;
      return std::make_unique<NsFgmMethod>(std::move(problem), std::move(x0), o);
    }
    case BaselineKind::NSPGM: {
      NsPgmOptions o;
      o.gamma = config.gamma.value_or(2.0);
      o.epsilon = config.epsilon;
      o.max_trials = config.max_trials;
      o.initial_lipschitz = config.lipschitz;
      o.probe = config.probe;
      return std::make_unique<NsPgmMethod>(std::move(problem), std::move(x0), o);
    }
    case BaselineKind::NSAGD: {
      if (!config.lipschitz) throw ConfigError("NS-AGD needs a Lipschitz constant");
      NsAgdOptions o;
      o.lipschitz = *config.lipschitz;
      o.accelerate = config.accelerate;
      return std::make_unique<NsAgdMethod>(std::move(problem), std::move(x0), o);
    }
  }
  throw ConfigError("unknown baseline");
}

}  // namespace acfgm
