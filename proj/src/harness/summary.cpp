#include "acfgm/harness/summary.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "acfgm/harness/format.hpp"

namespace acfgm::harness {

namespace {

std::string fixed(double value, const char* format) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, format, value);
  return buffer;
}

}  // namespace

std::vector<SummaryRow> summarize(const std::vector<Trace>& traces) {
  std::vector<SummaryRow> rows;
  for (const auto& t : traces) {
    if (t.records.empty() && !t.diverged) continue;
    SummaryRow row;
    row.problem = t.problem;
    row.solver = t.solver;
    row.method = t.method;
    row.status = t.diverged ? "diverged" : (t.stationary ? "stationary" : "ok");
    if (t.records.empty()) {
      row.final_objective = std::nan("");
      rows.push_back(std::move(row));
      continue;
    }
    const auto& first = t.records.front();
    const auto& last = t.records.back();
    row.iterations = last.iteration;
    if (row.iterations > 0) {
      const double k = static_cast<double>(row.iterations);
      row.cpu_per_1000 = 1000.0 * (last.elapsed_seconds - first.elapsed_seconds) / k;
      const double used = static_cast<double>(last.oracle_calls) -
                          static_cast<double>(t.init_oracle_calls);
      row.calls_per_iteration = used / k;
    }
    row.final_gap = last.gap;
    row.final_objective = last.objective;
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_summary_table(std::ostream& out, const std::vector<SummaryRow>& rows) {
  const std::vector<std::string> header = {"problem",        "solver",      "method",
                                           "iterations",     "cpu_s/1000it", "calls/it",
                                           "final_gap",      "final_obj",   "status"};
  std::vector<std::vector<std::string>> cells = {header};
  for (const auto& r : rows) {
    cells.push_back({r.problem, r.solver, r.method, std::to_string(r.iterations),
                     fixed(r.cpu_per_1000, "%.4f"), fixed(r.calls_per_iteration, "%.3f"),
                     r.final_gap ? fixed(*r.final_gap, "%.3e") : "-",
                     std::isnan(r.final_objective) ? "-" : fixed(r.final_objective, "%.6e"), r.status});
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  for (const auto& line : cells) {
    std::string text;
    for (std::size_t c = 0; c < line.size(); ++c) {
      // Text columns left aligned, numbers right aligned.
      const bool left = c < 3 || c + 1 == line.size();
      const std::string pad(width[c] - line[c].size(), ' ');
      text += left ? line[c] + pad : pad + line[c];
      if (c + 1 < line.size()) text += "  ";
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << '\n';
  }
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
  out << "problem,solver,method,iterations,cpu_seconds_per_1000_iterations,"
         "oracle_calls_per_iteration,final_gap,final_objective,status\n";
  for (const auto& r : rows) {
    out << r.problem << ',' << r.solver << ',' << r.method << ',' << r.iterations << ','
        << format_double(r.cpu_per_1000) << ',' << format_double(r.calls_per_iteration) << ','
        << (r.final_gap ? format_double(*r.final_gap) : "") << ','
        << (std::isnan(r.final_objective) ? "" : format_double(r.final_objective)) << ',' << r.status << '\n';
  }
}

}  // namespace acfgm::harness
