#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace acfgm::harness {

inline constexpr const char* kTraceHeader =
    "iteration,oracle_calls,elapsed_seconds,objective,gap,eta,tau,L_local";

struct TraceRecord {
  std::size_t iteration = 0;
  std::size_t oracle_calls = 0;
  double elapsed_seconds = 0.0;  // solver CPU time, initialization included
  double objective = 0.0;
  std::optional<double> gap;
  std::optional<double> eta;
  std::optional<double> tau;
  std::optional<double> local_curvature;

  bool operator==(const TraceRecord&) const = default;
};

struct Trace {
  std::string problem;
  std::string solver;       // configured name
  std::string method;       // e.g. "AC-FGM", "NS-FGM"
  std::string settings;     // policy label or baseline settings
  std::string config_hash;
  std::size_t init_oracle_calls = 0;
  std::optional<double> reference;  // Psi*_ref used for the gap column
  std::string reference_source;     // "known", "config", "min_over_solvers" or empty
  bool diverged = false;
  bool stationary = false;
  std::string message;              // divergence reason
  double wall_seconds = 0.0;
  std::optional<double> final_last_objective;  // Psi(x_k) when the trace follows bar x_k
  std::vector<TraceRecord> records;

  /// "<problem>__<solver>", also the file stem on export.
  std::string run_key() const { return problem + "__" + solver; }
};

/// Throws InvalidInput when iterations are not strictly increasing or calls
/// or elapsed time decrease.
void check_monotone(const Trace& trace);

void write_csv(std::ostream& out, const Trace& trace);
std::vector<TraceRecord> parse_csv(std::istream& in);

void write_json(std::ostream& out, const Trace& trace);
Trace parse_json(std::istream& in);

enum class ExportFormat { CSV, JSON };

/// Writes one file per trace into `dir` (created if needed). Throws DataError
/// on an unwritable path. Returns the written paths.
std::vector<std::filesystem::path> export_traces(const std::vector<Trace>& traces,
                                                 const std::filesystem::path& dir,
                                                 const std::vector<ExportFormat>& formats);

/// Loads every trace in `dir`: `<key>.json` when present, otherwise a bare
/// `<key>.csv` with problem and solver taken from the file stem. Sorted by
/// run key. Throws DataError when `dir` is not a readable directory.
std::vector<Trace> load_traces(const std::filesystem::path& dir);

}  // namespace acfgm::harness
