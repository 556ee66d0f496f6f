#include "acfgm/harness/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

#include "acfgm/baselines/baseline.hpp"
#include "acfgm/core/errors.hpp"
#include "acfgm/harness/format.hpp"
#include "acfgm/problems/generators.hpp"
#include "acfgm/problems/libsvm.hpp"
#include "acfgm/problems/oracles.hpp"
#include "acfgm/solver/acfgm.hpp"

namespace acfgm::harness {

namespace {

Dataset load_data(const ProblemSpec& spec, std::uint64_t seed) {
  if (spec.path) {
    LibsvmOptions options;
    options.labels =
        spec.family == ProblemFamily::Logistic ? LabelMode::Binary : LabelMode::Regression;
    options.features = spec.features;
    options.name = spec.name;
    try {
      return libsvm_read_file(*spec.path, options);
    } catch (const DataError&) {
      throw;
    } catch (const Error& e) {
      throw DataError(spec.path->string() + ": " + e.what());
    }
  }
  switch (spec.generator) {
    case DataGenerator::QP:
      return random_qp_instance(spec.m, spec.n, seed);
    case DataGenerator::Regression:
      return random_regression_instance(spec.m, spec.n, seed, spec.sparsity, spec.noise);
    case DataGenerator::Classification:
      return random_classification_instance(spec.m, spec.n, seed, spec.density, spec.noise);
  }
  throw DataError("unknown generator");
}

std::string baseline_settings(const SolverSpec& spec, const BaselineConfig& config) {
  std::ostringstream out;
  out << to_string(spec.method);
  if (config.gamma) out << " gamma=" << format_double(*config.gamma);
  if (config.lipschitz) out << " L=" << format_double(*config.lipschitz);
  if (spec.method == SolverMethod::NSFGM || spec.method == SolverMethod::NSPGM) {
    out << " epsilon=" << format_double(config.epsilon);
  }
  return out.str();
}

}  // namespace

double thread_cpu_seconds() {
  timespec ts{};
  if (clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts) != 0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
        .count();
  }
  return static_cast<double>(ts.tv_sec) + 1e-9 * static_cast<double>(ts.tv_nsec);
}

std::optional<double> smooth_lipschitz(const ProblemSpec& spec, const Dataset& data) {
  if (spec.lipschitz) return spec.lipschitz;
  switch (spec.family) {
    case ProblemFamily::QP:
    case ProblemFamily::LeastSquares:
    case ProblemFamily::Lasso:
      return least_squares_lipschitz(data);
    case ProblemFamily::Logistic:
      return logistic_lipschitz(data);
    case ProblemFamily::SqrtLasso:
      return std::nullopt;
  }
  return std::nullopt;
}

BuiltProblem build_problem(const ProblemSpec& spec, std::uint64_t default_seed,
                           bool need_lipschitz) {
  BuiltProblem built;
  built.name = spec.name;
  auto data = std::make_shared<Dataset>(load_data(spec, spec.seed.value_or(default_seed)));
  if (data->name.empty()) data->name = spec.name;
  try {
    validate(*data);
  } catch (const Error& e) {
    throw DataError(spec.name + ": " + e.what());
  }
  if (spec.family == ProblemFamily::Logistic && !has_binary_labels(*data)) {
    throw DataError(spec.name + ": logistic regression needs labels in {-1, +1}");
  }
  if (spec.penalty) built.lambda = resolve_penalty(*spec.penalty, *data);

  switch (spec.family) {
    case ProblemFamily::QP:
    case ProblemFamily::LeastSquares:
      built.problem = least_squares_oracle(data);
      break;
    case ProblemFamily::Lasso:
      built.problem = lasso_oracle(data, *built.lambda);
      break;
    case ProblemFamily::SqrtLasso:
      built.problem = sqrt_lasso_oracle(data, *built.lambda);
      break;
    case ProblemFamily::Logistic:
      built.problem = logistic_oracle(data, *built.lambda);
      break;
  }
  if (spec.reference) {
    built.reference = spec.reference;
    built.reference_source = "config";
  } else if (data->x_star &&
             (spec.family == ProblemFamily::QP || spec.family == ProblemFamily::LeastSquares)) {
    // b = A x*, so the nonnegative residual objective vanishes at x*.
    built.reference = 0.0;
    built.reference_source = "known";
  }
  if (need_lipschitz) built.lipschitz = smooth_lipschitz(spec, *data);
  built.x0 = DenseVector(data->cols());
  built.data = std::move(data);
  return built;
}

bool needs_lipschitz(const SolverSpec& spec) {
  return (spec.method == SolverMethod::NSAGD || spec.method == SolverMethod::GD) &&
         !spec.baseline.lipschitz;
}

std::unique_ptr<IterativeMethod> make_method(const SolverSpec& spec, const BuiltProblem& problem) {
  if (spec.method == SolverMethod::ACFGM) {
    return std::make_unique<AcFgmMethod>(problem.problem, problem.x0, spec.acfgm);
  }
  BaselineConfig config = spec.baseline;
  if (needs_lipschitz(spec)) {
    if (!problem.lipschitz) {
      throw ConfigError("solver " + spec.name + " needs a Lipschitz constant on problem " +
                        problem.name + " (set problem." + problem.name + ".lipschitz)");
    }
    config.lipschitz = problem.lipschitz;
  }
  return make_baseline(config, problem.problem, problem.x0);
}

Trace run_single(const SolverSpec& solver, const BuiltProblem& problem, std::size_t budget,
                 std::size_t stride) {
  Trace trace;
  trace.problem = problem.name;
  trace.solver = solver.name;
  trace.settings = solver.method == SolverMethod::ACFGM
                       ? policy_label(solver.acfgm.policy)
                       : baseline_settings(solver, solver.baseline);
  const auto wall_start = std::chrono::steady_clock::now();
  double cpu = 0.0;

  const auto record = [&](const IterativeMethod& method) {
    const IterationReport r = method.report();
    TraceRecord rec;
    rec.iteration = r.iteration;
    rec.oracle_calls = r.oracle_calls;
    rec.elapsed_seconds = cpu;
    rec.objective = r.objective;
    rec.eta = r.eta;
    rec.tau = r.tau;
    rec.local_curvature = r.local_curvature;
    if (!std::isfinite(rec.objective)) return false;
    trace.records.push_back(rec);
    return true;
  };

  std::unique_ptr<IterativeMethod> method;
  try {
    double start = thread_cpu_seconds();
    method = make_method(solver, problem);
    cpu += thread_cpu_seconds() - start;
    trace.method = method->name();
    trace.init_oracle_calls = method->init_oracle_calls();
    if (!record(*method)) throw Diverged("non-finite objective at the start point", 0);

    while (method->iteration() < budget && !method->finished()) {
      start = thread_cpu_seconds();
      method->step();
      cpu += thread_cpu_seconds() - start;
      const std::size_t k = method->iteration();
      if (k % stride == 0 || k == budget || method->finished()) {
        if (!record(*method)) throw Diverged("non-finite objective", k);
      }
    }
    if (!trace.records.empty() && trace.records.back().iteration != method->iteration()) {
      if (!record(*method)) throw Diverged("non-finite objective", method->iteration());
    }
    trace.stationary = method->finished();
    if (const auto* ac = dynamic_cast<const AcFgmMethod*>(method.get());
        ac != nullptr && ac->hoelder_mode()) {
      const auto& s = ac->state();
      trace.final_last_objective = s.value + problem.problem->prox_term().evaluate(s.x);
    }
  } catch (const Diverged& e) {
    trace.diverged = true;
    trace.message = std::string(e.what()) + " (iteration " + std::to_string(e.iteration()) + ")";
  } catch (const NumericError& e) {
    trace.diverged = true;
    trace.message = e.what();
  }
  if (trace.method.empty()) {
    trace.method = solver.method == SolverMethod::ACFGM ? "AC-FGM" : to_string(solver.method);
  }
  trace.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
  return trace;
}

void assign_reference(std::vector<Trace*>& traces, std::optional<double> known,
                      const std::string& source) {
  std::optional<double> reference = known;
  std::string label = source;
  if (!reference) {
    double best = std::numeric_limits<double>::infinity();
    for (const Trace* t : traces) {
      for (const auto& r : t->records) best = std::min(best, r.objective);
    }
    if (std::isfinite(best)) {
      reference = best;
      label = "min_over_solvers";
      for (const Trace* t : traces) {
        for (const auto& r : t->records) {
          if (!(reference <= r.objective)) throw InvalidState("reference above a recorded objective");
        }
      }
    }
  }
  for (Trace* t : traces) {
    t->reference = reference;
    t->reference_source = reference ? label : std::string{};
    for (auto& r : t->records) {
      if (reference) {
        r.gap = r.objective - *reference;
      } else {
        r.gap.reset();
      }
    }
  }
}

std::vector<Trace> run_experiment(const ExperimentConfig& config, std::optional<std::size_t> jobs) {
  const bool lipschitz = std::any_of(config.solvers.begin(), config.solvers.end(),
                                     [](const SolverSpec& s) { return needs_lipschitz(s); });
  std::vector<BuiltProblem> problems;
  problems.reserve(config.problems.size());
  for (const auto& spec : config.problems) {
    problems.push_back(build_problem(spec, config.seed, lipschitz));
  }
  // Fail on unusable solver/problem pairs before any run starts.
  for (const auto& p : problems) {
    for (const auto& s : config.solvers) {
      if (needs_lipschitz(s) && !p.lipschitz) {
        throw ConfigError("solver " + s.name + " needs a Lipschitz constant on problem " + p.name +
                          " (set problem." + p.name + ".lipschitz)");
      }
    }
  }

  struct Job {
    std::string key;
    std::size_t problem;
    std::size_t solver;
  };
  std::vector<Job> work;
  for (std::size_t p = 0; p < problems.size(); ++p) {
    for (std::size_t s = 0; s < config.solvers.size(); ++s) {
      work.push_back({problems[p].name + "__" + config.solvers[s].name, p, s});
    }
  }
  std::sort(work.begin(), work.end(), [](const Job& a, const Job& b) { return a.key < b.key; });

  std::vector<Trace> traces(work.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(work.size());
  const auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++) {
      try {
        traces[i] = run_single(config.solvers[work[i].solver], problems[work[i].problem],
                               config.budget, config.stride);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(jobs.value_or(config.jobs), 1, work.size());
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (std::size_t i = 0; i < work.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
  }

  const std::string hash = config_hash(config);
  for (auto& t : traces) t.config_hash = hash;
  for (std::size_t p = 0; p < problems.size(); ++p) {
    std::vector<Trace*> group;
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (work[i].problem == p) group.push_back(&traces[i]);
    }
    assign_reference(group, problems[p].reference, problems[p].reference_source);
  }
  return traces;
}

}  // namespace acfgm::harness
