#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "acfgm/baselines/baseline.hpp"
#include "acfgm/problems/penalty.hpp"
#include "acfgm/solver/config.hpp"

namespace acfgm::harness {

enum class ProblemFamily { QP, LeastSquares, Lasso, SqrtLasso, Logistic };
enum class DataGenerator { QP, Regression, Classification };

ProblemFamily parse_problem_family(const std::string& text);
std::string to_string(ProblemFamily family);
DataGenerator parse_data_generator(const std::string& text);
std::string to_string(DataGenerator generator);

struct ProblemSpec {
  std::string name;
  ProblemFamily family = ProblemFamily::QP;

  // Data source: a LIBSVM file when `path` is set, a generator otherwise.
  std::optional<std::filesystem::path> path;
  std::optional<std::size_t> features;
  DataGenerator generator = DataGenerator::QP;
  std::size_t m = 100;
  std::size_t n = 200;
  std::optional<std::uint64_t> seed;  // defaults to the experiment seed
  double sparsity = 0.1;
  double density = 1.0;
  double noise = 0.1;

  std::optional<PenaltySpec> penalty;  // required for lasso, sqrt_lasso, logistic
  std::optional<double> reference;     // known Psi*, skips the min-over-solvers rule
  std::optional<double> lipschitz;     // overrides the computed constant (NS-AGD, GD)
};

enum class SolverMethod { ACFGM, AdGD, NSFGM, NSPGM, NSAGD, GD };

SolverMethod parse_solver_method(const std::string& text);
std::string to_string(SolverMethod method);

struct SolverSpec {
  std::string name;
  SolverMethod method = SolverMethod::ACFGM;
  SolverConfig acfgm;       // used when method == ACFGM
  BaselineConfig baseline;  // used otherwise
};

enum class OutputFormat { CSV, JSON, Both };

struct ExperimentConfig {
  std::vector<ProblemSpec> problems;
  std::vector<SolverSpec> solvers;
  std::size_t budget = 1000;
  std::size_t stride = 1;
  std::uint64_t seed = 0;
  std::filesystem::path output_dir = "traces";
  OutputFormat output_format = OutputFormat::Both;
  std::size_t jobs = 1;
};

/// Raw `key = value` pairs. Lines are trimmed, `#` starts a comment, blank
/// lines are skipped. Throws ConfigError on a malformed line or duplicate key.
std::map<std::string, std::string> parse_key_values(std::istream& in);

/// Applies "key=value" overrides on top of `pairs`.
void apply_overrides(std::map<std::string, std::string>& pairs,
                     const std::vector<std::string>& overrides);

/// Typed config. Throws ConfigError on unknown keys, bad values, no problem,
/// no solver, budget == 0 or stride == 0.
ExperimentConfig build_config(const std::map<std::string, std::string>& pairs);

ExperimentConfig parse_config(std::istream& in, const std::vector<std::string>& overrides = {});
ExperimentConfig load_config(const std::filesystem::path& path,
                             const std::vector<std::string>& overrides = {});

/// Sorted key=value lines of every resolved field that affects results
/// (output settings and jobs excluded).
std::string canonical_form(const ExperimentConfig& config);

/// 64-bit FNV-1a of the canonical form, as 16 hex digits.
std::string config_hash(const ExperimentConfig& config);

std::string canonical_form(const ProblemSpec& problem, std::uint64_t default_seed);
std::string canonical_form(const SolverSpec& solver);

}  // namespace acfgm::harness
