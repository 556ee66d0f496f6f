// acfgm: experiment runner.
//
//   acfgm run <config> [--set key=value]... [--jobs N] [--out dir]
//   acfgm summarize <trace-dir> [--csv file]
//   acfgm gen <family> <m> <n> <seed> [-o file] [--xstar file]
//
// Exit codes: 0 success, 1 config error, 2 data error, 3 solver divergence.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "acfgm/core/errors.hpp"
#include "acfgm/harness/config.hpp"
#include "acfgm/harness/format.hpp"
#include "acfgm/harness/runner.hpp"
#include "acfgm/harness/summary.hpp"
#include "acfgm/harness/trace.hpp"
#include "acfgm/problems/generators.hpp"
#include "acfgm/problems/libsvm.hpp"

namespace {

using namespace acfgm;
using namespace acfgm::harness;

constexpr int kOk = 0;
constexpr int kConfigError = 1;
constexpr int kDataError = 2;
constexpr int kDiverged = 3;

std::vector<ExportFormat> formats_of(OutputFormat format) {
  switch (format) {
    case OutputFormat::CSV: return {ExportFormat::CSV};
    case OutputFormat::JSON: return {ExportFormat::JSON};
    case OutputFormat::Both: return {ExportFormat::CSV, ExportFormat::JSON};
  }
  return {};
}

int run_command(const std::string& path, const std::vector<std::string>& overrides,
                std::optional<std::size_t> jobs, const std::string& out_dir) {
  ExperimentConfig config = load_config(path, overrides);
  if (!out_dir.empty()) config.output_dir = out_dir;
  const auto traces = run_experiment(config, jobs);
  export_traces(traces, config.output_dir, formats_of(config.output_format));

  const auto rows = summarize(traces);
  write_summary_table(std::cout, rows);
  std::ofstream csv(config.output_dir / "summary.csv");
  if (!csv) throw DataError("cannot write summary.csv in " + config.output_dir.string());
  write_summary_csv(csv, rows);

  bool diverged = false;
  for (const auto& t : traces) {
    if (t.diverged) {
      std::cerr << "diverged: " << t.run_key() << ": " << t.message << '\n';
      diverged = true;
    }
  }
  std::cerr << "traces written to " << config.output_dir.string() << " (config "
            << config_hash(config) << ")\n";
  return diverged ? kDiverged : kOk;
}

int summarize_command(const std::string& dir, const std::string& csv_path) {
  const auto rows = summarize(load_traces(dir));
  write_summary_table(std::cout, rows);
  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) throw DataError("cannot write '" + csv_path + "'");
    write_summary_csv(csv, rows);
  }
  return kOk;
}

int gen_command(const std::string& family, std::size_t m, std::size_t n, std::uint64_t seed,
                const std::string& out_path, const std::string& xstar_path) {
  if (m == 0 || n == 0) throw ConfigError("m and n must be positive");
  Dataset data;
  switch (parse_data_generator(family)) {
    case DataGenerator::QP: data = random_qp_instance(m, n, seed); break;
    case DataGenerator::Regression: data = random_regression_instance(m, n, seed); break;
    case DataGenerator::Classification: data = random_classification_instance(m, n, seed); break;
  }
  if (out_path.empty() || out_path == "-") {
    libsvm_write(std::cout, data);
  } else {
    std::ofstream out(out_path);
    if (!out) throw DataError("cannot write '" + out_path + "'");
    libsvm_write(out, data);
  }
  if (!xstar_path.empty()) {
    if (!data.x_star) throw DataError("generator " + family + " has no known solution");
    std::ofstream out(xstar_path);
    if (!out) throw DataError("cannot write '" + xstar_path + "'");
    for (std::size_t i = 0; i < data.x_star->size(); ++i) out << format_double((*data.x_star)[i]) << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"AC-FGM experiment runner"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run every (problem, solver) pair of a config");
  std::string config_path, out_dir;
  std::vector<std::string> overrides;
  std::optional<std::size_t> jobs;
  run->add_option("config", config_path, "config file")->required();
  run->add_option("--set", overrides, "override a config key (key=value)");
  run->add_option("--jobs,-j", jobs, "concurrent runs");
  run->add_option("--out", out_dir, "output directory (overrides output.dir)");

  auto* summ = app.add_subcommand("summarize", "tabulate the traces in a directory");
  std::string trace_dir, csv_path;
  summ->add_option("trace-dir", trace_dir, "directory written by run")->required();
  summ->add_option("--csv", csv_path, "also write the table as CSV");

  auto* gen = app.add_subcommand("gen", "write a random instance in LIBSVM format");
  std::string family, gen_out, xstar_out;
  std::size_t m = 0, n = 0;
  std::uint64_t seed = 0;
  gen->add_option("family", family, "qp, regression or classification")->required();
  gen->add_option("m", m, "rows")->required();
  gen->add_option("n", n, "columns")->required();
  gen->add_option("seed", seed, "seed")->required();
  gen->add_option("-o,--output", gen_out, "output file (default stdout)");
  gen->add_option("--xstar", xstar_out, "write the planted solution, one value per line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*run) return run_command(config_path, overrides, jobs, out_dir);
    if (*summ) return summarize_command(trace_dir, csv_path);
    if (*gen) return gen_command(family, m, n, seed, gen_out, xstar_out);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kDataError;
  } catch (const ParseError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kDataError;
  } catch (const InvalidInput& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kDataError;
  } catch (const Diverged& e) {
    std::cerr << "diverged: " << e.what() << '\n';
    return kDiverged;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  }
  return kOk;
}
