#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "acfgm/core/method.hpp"
#include "acfgm/core/problem.hpp"
#include "acfgm/harness/config.hpp"
#include "acfgm/harness/trace.hpp"
#include "acfgm/problems/dataset.hpp"

namespace acfgm::harness {

struct BuiltProblem {
  std::string name;
  std::shared_ptr<const Dataset> data;
  std::shared_ptr<const CompositeProblem> problem;
  std::optional<double> lambda;
  std::optional<double> lipschitz;  // filled when some solver needs it
  std::optional<double> reference;  // known Psi*
  std::string reference_source;
  DenseVector x0;                   // all solvers start at the origin
};

/// Loads or generates the data and builds the oracle. Throws DataError when
/// the data cannot be read or does not fit the family.
BuiltProblem build_problem(const ProblemSpec& spec, std::uint64_t default_seed,
                           bool need_lipschitz = false);

/// Lipschitz constant of the smooth part, when one exists for the family.
std::optional<double> smooth_lipschitz(const ProblemSpec& spec, const Dataset& data);

/// Throws ConfigError when the solver cannot run on this problem (e.g. NS-AGD
/// without a Lipschitz constant).
std::unique_ptr<IterativeMethod> make_method(const SolverSpec& spec, const BuiltProblem& problem);

bool needs_lipschitz(const SolverSpec& spec);

/// Runs one solver for `budget` iterations, recording iteration 0, every
/// `stride`-th iteration and the last one. Divergence ends the trace early
/// and sets `diverged`; it never throws Diverged.
Trace run_single(const SolverSpec& solver, const BuiltProblem& problem, std::size_t budget,
                 std::size_t stride);

/// Sets the reference for traces of one problem and back-fills gaps. With no
/// known value the reference is the lowest recorded objective.
void assign_reference(std::vector<Trace*>& traces, std::optional<double> known,
                      const std::string& source);

/// Every (problem, solver) pair, up to `jobs` runs at a time, sorted by run key.
std::vector<Trace> run_experiment(const ExperimentConfig& config,
                                  std::optional<std::size_t> jobs = {});

/// CPU time consumed by the calling thread, in seconds.
double thread_cpu_seconds();

}  // namespace acfgm::harness
