#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "acfgm/harness/trace.hpp"

namespace acfgm::harness {

struct SummaryRow {
  std::string problem;
  std::string solver;
  std::string method;
  std::size_t iterations = 0;
  double cpu_per_1000 = 0.0;      // CPU seconds per 1000 iterations, setup excluded
  double calls_per_iteration = 0.0;  // (final calls - setup calls) / iterations
  std::optional<double> final_gap;
  double final_objective = 0.0;
  std::string status;  // "ok", "stationary" or "diverged"
};

/// One row per trace, in input order. Traces without records are skipped
/// unless they diverged (those report a NaN objective).
std::vector<SummaryRow> summarize(const std::vector<Trace>& traces);

/// Column-aligned text table (header only for no rows).
void write_summary_table(std::ostream& out, const std::vector<SummaryRow>& rows);

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows);

}  // namespace acfgm::harness
