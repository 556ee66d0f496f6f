#include "acfgm/harness/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "acfgm/core/errors.hpp"
#include "acfgm/harness/format.hpp"

namespace acfgm::harness {

namespace {

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-';
  });
}

// Typed access to one section's fields with bookkeeping of which were used.
class Section {
 public:
  Section(std::string prefix, std::map<std::string, std::string> fields)
      : prefix_(std::move(prefix)), fields_(std::move(fields)) {}

  bool has(const std::string& key) const { return fields_.count(key) != 0; }

  std::optional<std::string> text(const std::string& key) {
    auto it = fields_.find(key);
    if (it == fields_.end()) return std::nullopt;
    used_.insert(key);
    return it->second;
  }

  std::optional<double> real(const std::string& key) {
    auto raw = text(key);
    if (!raw) return std::nullopt;
    auto value = parse_double(*raw);
    if (!value) fail(key, "expected a number, got '" + *raw + "'");
    return value;
  }

  std::optional<std::uint64_t> unsigned_int(const std::string& key) {
    auto raw = text(key);
    if (!raw) return std::nullopt;
    auto value = parse_unsigned(*raw);
    if (!value) fail(key, "expected a nonnegative integer, got '" + *raw + "'");
    return value;
  }

  std::optional<bool> boolean(const std::string& key) {
    auto raw = text(key);
    if (!raw) return std::nullopt;
    auto value = parse_bool(*raw);
    if (!value) fail(key, "expected true or false, got '" + *raw + "'");
    return value;
  }

  // Every field not consumed is unknown in this context.
  void finish(const std::string& context) const {
    for (const auto& [key, value] : fields_) {
      if (used_.count(key) == 0) {
        throw ConfigError("unknown key '" + prefix_ + key + "'" +
                          (context.empty() ? "" : " for " + context));
      }
    }
  }

  [[noreturn]] void fail(const std::string& key, const std::string& message) const {
    std::string where = prefix_ + key;
    if (!where.empty() && where.back() == '.') where.pop_back();
    throw ConfigError(where + ": " + message);
  }

 private:
  std::string prefix_;
  std::map<std::string, std::string> fields_;
  std::set<std::string> used_;
};

double positive(Section& section, const std::string& key, double value) {
  if (!(value > 0.0)) section.fail(key, "must be positive");
  return value;
}

ProblemSpec build_problem(const std::string& name, Section section) {
  ProblemSpec spec;
  spec.name = name;
  auto family = section.text("family");
  if (!family) section.fail("family", "missing");
  try {
    spec.family = parse_problem_family(*family);
  } catch (const ConfigError& e) {
    section.fail("family", e.what());
  }
  switch (spec.family) {
    case ProblemFamily::QP:
      spec.generator = DataGenerator::QP;
      break;
    case ProblemFamily::LeastSquares:
    case ProblemFamily::Lasso:
    case ProblemFamily::SqrtLasso:
      spec.generator = DataGenerator::Regression;
      break;
    case ProblemFamily::Logistic:
      spec.generator = DataGenerator::Classification;
      break;
  }

  if (auto path = section.text("path")) {
    if (path->empty()) section.fail("path", "empty");
    spec.path = *path;
    if (auto f = section.unsigned_int("features")) {
      if (*f == 0) section.fail("features", "must be positive");
      spec.features = static_cast<std::size_t>(*f);
    }
  } else {
    if (auto g = section.text("generator")) {
      try {
        spec.generator = parse_data_generator(*g);
      } catch (const ConfigError& e) {
        section.fail("generator", e.what());
      }
    }
    if (auto m = section.unsigned_int("m")) spec.m = static_cast<std::size_t>(*m);
    if (auto n = section.unsigned_int("n")) spec.n = static_cast<std::size_t>(*n);
    if (spec.m == 0) section.fail("m", "must be positive");
    if (spec.n == 0) section.fail("n", "must be positive");
    spec.seed = section.unsigned_int("seed");
    if (spec.generator != DataGenerator::QP) {
      if (auto v = section.real("noise")) {
        if (!(*v >= 0.0)) section.fail("noise", "must be nonnegative");
        spec.noise = *v;
      }
    }
    if (spec.generator == DataGenerator::Regression) {
      if (auto v = section.real("sparsity")) {
        if (!(*v > 0.0 && *v <= 1.0)) section.fail("sparsity", "must lie in (0, 1]");
        spec.sparsity = *v;
      }
    }
    if (spec.generator == DataGenerator::Classification) {
      if (auto v = section.real("density")) {
        if (!(*v > 0.0 && *v <= 1.0)) section.fail("density", "must lie in (0, 1]");
        spec.density = *v;
      }
    }
  }

  const bool penalized = spec.family == ProblemFamily::Lasso ||
                         spec.family == ProblemFamily::SqrtLasso ||
                         spec.family == ProblemFamily::Logistic;
  if (penalized) {
    auto penalty = section.text("penalty");
    if (!penalty) section.fail("penalty", "required for family " + to_string(spec.family));
    try {
      spec.penalty = parse_penalty(*penalty);
    } catch (const Error& e) {
      section.fail("penalty", e.what());
    }
  }
  if (auto r = section.real("reference")) spec.reference = *r;
  if (auto l = section.real("lipschitz")) spec.lipschitz = positive(section, "lipschitz", *l);
  section.finish("family " + to_string(spec.family) + (spec.path ? " with a data file" : ""));
  return spec;
}

SolverConfig build_acfgm(Section& section) {
  SolverConfig config;
  const std::string policy = lower(section.text("policy").value_or("simple"));
  if (policy == "simple") {
    config.policy = SimplePolicy{};
  } else if (policy == "adaptive") {
    config.policy = AdaptivePolicy{section.real("alpha").value_or(0.1)};
  } else if (policy == "hoelder" || policy == "holder") {
    HoelderPolicy h;
    if (auto e = section.real("epsilon")) h.epsilon = *e;
    h.alpha = section.real("alpha");
    config.policy = h;
  } else {
    section.fail("policy", "expected simple, adaptive or hoelder, got '" + policy + "'");
  }
  if (auto beta = section.real("beta")) config.beta = *beta;

  const std::string init = lower(section.text("init").value_or("from_l0"));
  if (init == "from_l0") {
    FromL0 s;
    if (auto v = section.real("scale")) s.scale = *v;
    config.init = s;
  } else if (init == "line_search") {
    FirstIterLineSearch s;
    if (auto v = section.real("gamma")) s.gamma = *v;
    if (auto v = section.unsigned_int("max_trials")) s.max_trials = static_cast<std::size_t>(*v);
    if (auto v = section.real("start_multiplier")) s.start_multiplier = *v;
    config.init = s;
  } else if (init == "explicit") {
    auto eta1 = section.real("eta1");
    if (!eta1) section.fail("eta1", "required with init = explicit");
    config.init = ExplicitStep{*eta1};
  } else {
    section.fail("init", "expected from_l0, line_search or explicit, got '" + init + "'");
  }
  try {
    validate(config);
  } catch (const ConfigError& e) {
    section.fail("", e.what());
  }
  section.finish("AC-FGM with policy " + policy + " and init " + init);
  return config;
}

BaselineConfig build_baseline(SolverMethod method, Section& section) {
  BaselineConfig config;
  switch (method) {
    case SolverMethod::AdGD:
      config.method = BaselineKind::AdGD;
      break;
    case SolverMethod::NSFGM:
      config.method = BaselineKind::NSFGM;
      break;
    case SolverMethod::NSPGM:
      config.method = BaselineKind::NSPGM;
      break;
    case SolverMethod::NSAGD:
    case SolverMethod::GD:
      config.method = BaselineKind::NSAGD;
      config.accelerate = method == SolverMethod::NSAGD;
      break;
    case SolverMethod::ACFGM:
      break;
  }
  const bool line_search = method == SolverMethod::NSFGM || method == SolverMethod::NSPGM;
  if (method == SolverMethod::AdGD || line_search) {
    if (auto v = section.real("gamma")) {
      if (!(*v > 1.0)) section.fail("gamma", "must exceed 1");
      config.gamma = *v;
    }
    if (auto v = section.unsigned_int("max_trials")) {
      if (*v == 0) section.fail("max_trials", "must be positive");
      config.max_trials = static_cast<std::size_t>(*v);
    }
  }
  if (line_search) {
    if (auto v = section.real("epsilon")) config.epsilon = positive(section, "epsilon", *v);
  }
  if (line_search || method == SolverMethod::NSAGD || method == SolverMethod::GD) {
    if (auto v = section.real("lipschitz")) config.lipschitz = positive(section, "lipschitz", *v);
  }
  section.finish(to_string(method));
  return config;
}

SolverSpec build_solver(const std::string& name, Section section) {
  SolverSpec spec;
  spec.name = name;
  auto method = section.text("method");
  if (!method) section.fail("method", "missing");
  try {
    spec.method = parse_solver_method(*method);
  } catch (const ConfigError& e) {
    section.fail("method", e.what());
  }
  if (spec.method == SolverMethod::ACFGM) {
    spec.acfgm = build_acfgm(section);
  } else {
    spec.baseline = build_baseline(spec.method, section);
  }
  return spec;
}

void emit(std::vector<std::string>& lines, const std::string& key, const std::string& value) {
  lines.push_back(key + "=" + value);
}

std::string join_sorted(std::vector<std::string> lines) {
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

std::vector<std::string> lines_of(const std::string& block) {
  std::vector<std::string> out;
  std::istringstream in(block);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

}  // namespace

ProblemFamily parse_problem_family(const std::string& text) {
  const std::string t = lower(text);
  if (t == "qp") return ProblemFamily::QP;
  if (t == "least_squares") return ProblemFamily::LeastSquares;
  if (t == "lasso") return ProblemFamily::Lasso;
  if (t == "sqrt_lasso") return ProblemFamily::SqrtLasso;
  if (t == "logistic") return ProblemFamily::Logistic;
  throw ConfigError("unknown problem family '" + text +
                    "' (expected qp, least_squares, lasso, sqrt_lasso, logistic)");
}

std::string to_string(ProblemFamily family) {
  switch (family) {
    case ProblemFamily::QP: return "qp";
    case ProblemFamily::LeastSquares: return "least_squares";
    case ProblemFamily::Lasso: return "lasso";
    case ProblemFamily::SqrtLasso: return "sqrt_lasso";
    case ProblemFamily::Logistic: return "logistic";
  }
  return "?";
}

DataGenerator parse_data_generator(const std::string& text) {
  const std::string t = lower(text);
  if (t == "qp") return DataGenerator::QP;
  if (t == "regression") return DataGenerator::Regression;
  if (t == "classification") return DataGenerator::Classification;
  throw ConfigError("unknown generator '" + text + "' (expected qp, regression, classification)");
}

std::string to_string(DataGenerator generator) {
  switch (generator) {
    case DataGenerator::QP: return "qp";
    case DataGenerator::Regression: return "regression";
    case DataGenerator::Classification: return "classification";
  }
  return "?";
}

SolverMethod parse_solver_method(const std::string& text) {
  std::string t;
  for (char c : lower(text)) {
    if (c != '-' && c != '_') t += c;
  }
  if (t == "acfgm") return SolverMethod::ACFGM;
  if (t == "adgd") return SolverMethod::AdGD;
  if (t == "nsfgm") return SolverMethod::NSFGM;
  if (t == "nspgm") return SolverMethod::NSPGM;
  if (t == "nsagd") return SolverMethod::NSAGD;
  if (t == "gd") return SolverMethod::GD;
  throw ConfigError("unknown solver method '" + text +
                    "' (expected acfgm, adgd, nsfgm, nspgm, nsagd, gd)");
}

std::string to_string(SolverMethod method) {
  switch (method) {
    case SolverMethod::ACFGM: return "acfgm";
    case SolverMethod::AdGD: return "adgd";
    case SolverMethod::NSFGM: return "nsfgm";
    case SolverMethod::NSPGM: return "nspgm";
    case SolverMethod::NSAGD: return "nsagd";
    case SolverMethod::GD: return "gd";
  }
  return "?";
}

std::map<std::string, std::string> parse_key_values(std::istream& in) {
  std::map<std::string, std::string> pairs;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view view(line);
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(number) + ": expected key = value");
    }
    const std::string key(trim(view.substr(0, eq)));
    const std::string value(trim(view.substr(eq + 1)));
    if (key.empty()) throw ConfigError("line " + std::to_string(number) + ": empty key");
    if (!pairs.emplace(key, value).second) {
      throw ConfigError("line " + std::to_string(number) + ": duplicate key '" + key + "'");
    }
  }
  return pairs;
}

void apply_overrides(std::map<std::string, std::string>& pairs,
                     const std::vector<std::string>& overrides) {
  for (const auto& item : overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ConfigError("override '" + item + "': expected key=value");
    const std::string key(trim(std::string_view(item).substr(0, eq)));
    if (key.empty()) throw ConfigError("override '" + item + "': empty key");
    pairs[key] = std::string(trim(std::string_view(item).substr(eq + 1)));
  }
}

ExperimentConfig build_config(const std::map<std::string, std::string>& pairs) {
  std::map<std::string, std::string> top;
  std::map<std::string, std::map<std::string, std::string>> problems, solvers;
  for (const auto& [key, value] : pairs) {
    const auto dot = key.find('.');
    const std::string head = key.substr(0, dot);
    if ((head == "problem" || head == "solver") && dot != std::string::npos) {
      const auto second = key.find('.', dot + 1);
      if (second == std::string::npos) {
        throw ConfigError("key '" + key + "': expected " + head + ".<name>.<field>");
      }
      const std::string name = key.substr(dot + 1, second - dot - 1);
      if (!valid_name(name)) {
        throw ConfigError("key '" + key + "': names use letters, digits, '_' and '-'");
      }
      (head == "problem" ? problems : solvers)[name][key.substr(second + 1)] = value;
    } else {
      top[key] = value;
    }
  }

  ExperimentConfig config;
  Section global("", top);
  if (auto v = global.unsigned_int("budget")) config.budget = static_cast<std::size_t>(*v);
  if (auto v = global.unsigned_int("stride")) config.stride = static_cast<std::size_t>(*v);
  if (auto v = global.unsigned_int("seed")) config.seed = *v;
  if (auto v = global.unsigned_int("jobs")) config.jobs = static_cast<std::size_t>(*v);
  if (auto v = global.text("output.dir")) config.output_dir = *v;
  if (auto v = global.text("output.format")) {
    const std::string f = lower(*v);
    if (f == "csv") {
      config.output_format = OutputFormat::CSV;
    } else if (f == "json") {
      config.output_format = OutputFormat::JSON;
    } else if (f == "both") {
      config.output_format = OutputFormat::Both;
    } else {
      global.fail("output.format", "expected csv, json or both");
    }
  }
  global.finish("");
  if (config.budget == 0) throw ConfigError("budget must be at least 1");
  if (config.stride == 0) throw ConfigError("stride must be at least 1");
  if (config.jobs == 0) throw ConfigError("jobs must be at least 1");

  for (auto& [name, fields] : problems) {
    config.problems.push_back(build_problem(name, Section("problem." + name + ".", fields)));
  }
  for (auto& [name, fields] : solvers) {
    config.solvers.push_back(build_solver(name, Section("solver." + name + ".", fields)));
  }
  if (config.problems.empty()) throw ConfigError("no problem configured (problem.<name>.family)");
  if (config.solvers.empty()) throw ConfigError("no solver configured (solver.<name>.method)");
  return config;
}

ExperimentConfig parse_config(std::istream& in, const std::vector<std::string>& overrides) {
  auto pairs = parse_key_values(in);
  apply_overrides(pairs, overrides);
  return build_config(pairs);
}

ExperimentConfig load_config(const std::filesystem::path& path,
                             const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  return parse_config(in, overrides);
}

std::string canonical_form(const ProblemSpec& p, std::uint64_t default_seed) {
  std::vector<std::string> lines;
  const std::string k = "problem." + p.name + ".";
  emit(lines, k + "family", to_string(p.family));
  if (p.path) {
    emit(lines, k + "path", p.path->string());
    if (p.features) emit(lines, k + "features", std::to_string(*p.features));
  } else {
    emit(lines, k + "generator", to_string(p.generator));
    emit(lines, k + "m", std::to_string(p.m));
    emit(lines, k + "n", std::to_string(p.n));
    emit(lines, k + "seed", std::to_string(p.seed.value_or(default_seed)));
    if (p.generator != DataGenerator::QP) emit(lines, k + "noise", format_double(p.noise));
    if (p.generator == DataGenerator::Regression) {
      emit(lines, k + "sparsity", format_double(p.sparsity));
    }
    if (p.generator == DataGenerator::Classification) {
      emit(lines, k + "density", format_double(p.density));
    }
  }
  if (p.penalty) emit(lines, k + "penalty", to_string(*p.penalty));
  if (p.reference) emit(lines, k + "reference", format_double(*p.reference));
  if (p.lipschitz) emit(lines, k + "lipschitz", format_double(*p.lipschitz));
  return join_sorted(lines);
}

std::string canonical_form(const SolverSpec& s) {
  std::vector<std::string> lines;
  const std::string k = "solver." + s.name + ".";
  emit(lines, k + "method", to_string(s.method));
  if (s.method == SolverMethod::ACFGM) {
    const auto& c = s.acfgm;
    emit(lines, k + "policy", policy_label(c.policy));
    emit(lines, k + "beta", format_double(c.beta));
    if (const auto* f = std::get_if<FromL0>(&c.init)) {
      emit(lines, k + "init", "from_l0");
      emit(lines, k + "scale", format_double(f->scale));
    } else if (const auto* ls = std::get_if<FirstIterLineSearch>(&c.init)) {
      emit(lines, k + "init", "line_search");
      emit(lines, k + "gamma", format_double(ls->gamma));
      emit(lines, k + "max_trials", std::to_string(ls->max_trials));
      emit(lines, k + "start_multiplier", format_double(ls->start_multiplier));
    } else if (const auto* e = std::get_if<ExplicitStep>(&c.init)) {
      emit(lines, k + "init", "explicit");
      emit(lines, k + "eta1", format_double(e->eta1));
    }
  } else {
    const auto& b = s.baseline;
    if (b.gamma) emit(lines, k + "gamma", format_double(*b.gamma));
    if (s.method != SolverMethod::NSAGD && s.method != SolverMethod::GD) {
      emit(lines, k + "max_trials", std::to_string(b.max_trials));
    }
    if (s.method == SolverMethod::NSFGM || s.method == SolverMethod::NSPGM) {
      emit(lines, k + "epsilon", format_double(b.epsilon));
    }
    if (b.lipschitz) emit(lines, k + "lipschitz", format_double(*b.lipschitz));
  }
  return join_sorted(lines);
}

std::string canonical_form(const ExperimentConfig& config) {
  std::vector<std::string> lines;
  emit(lines, "budget", std::to_string(config.budget));
  emit(lines, "stride", std::to_string(config.stride));
  emit(lines, "seed", std::to_string(config.seed));
  for (const auto& p : config.problems) {
    for (auto& line : lines_of(canonical_form(p, config.seed))) lines.push_back(std::move(line));
  }
  for (const auto& s : config.solvers) {
    for (auto& line : lines_of(canonical_form(s))) lines.push_back(std::move(line));
  }
  return join_sorted(lines);
}

std::string config_hash(const ExperimentConfig& config) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_form(config)) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

}  // namespace acfgm::harness
