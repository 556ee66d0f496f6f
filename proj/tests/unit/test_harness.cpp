#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "acfgm/baselines/nsfgm.hpp"
#include "acfgm/core/errors.hpp"
#include "acfgm/harness/config.hpp"
#include "acfgm/harness/format.hpp"
#include "acfgm/harness/runner.hpp"
#include "acfgm/harness/summary.hpp"
#include "acfgm/harness/trace.hpp"
#include "acfgm/problems/generators.hpp"
#include "acfgm/problems/oracles.hpp"
#include "../support/gen.hpp"

using namespace acfgm;
using namespace acfgm::harness;
using acfgm::testing::Gen;

namespace {

const char* kSmallQp = R"(
# small planted QP
budget = 60
stride = 5
seed = 4

problem.qp.family = qp
problem.qp.m = 20
problem.qp.n = 30

solver.simple.method = acfgm
solver.adaptive.method = acfgm
solver.adaptive.policy = adaptive
solver.adaptive.alpha = 0.1
solver.fgm.method = nsfgm
)";

ExperimentConfig config_from(const std::string& text, const std::vector<std::string>& set = {}) {
  std::istringstream in(text);
  return parse_config(in, set);
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() /
             ("acfgm_harness_" + name + "_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  std::filesystem::remove_all(dir);
  return dir;
}

Trace random_trace(Gen& gen) {
  Trace t;
  t.problem = "p" + std::to_string(gen.index(100));
  t.solver = "s" + std::to_string(gen.index(100));
  t.method = "AC-FGM";
  t.settings = "simple";
  t.config_hash = "0123456789abcdef";
  t.init_oracle_calls = gen.index(4);
  std::size_t it = 0, calls = t.init_oracle_calls;
  double elapsed = 0.0;
  const std::size_t n = 1 + gen.index(40);
  for (std::size_t i = 0; i < n; ++i) {
    TraceRecord r;
    r.iteration = it;
    r.oracle_calls = calls;
    r.elapsed_seconds = elapsed;
    // Mix of magnitudes, including subnormal-range and awkward decimals.
    r.objective = gen.normal() * std::pow(10.0, gen.uniform(-300.0, 300.0));
    if (gen.uniform() < 0.7) r.gap = std::abs(gen.normal()) * std::pow(10.0, gen.uniform(-20, 5));
    if (gen.uniform() < 0.8) r.eta = gen.uniform() / 3.0;
    if (gen.uniform() < 0.8) r.tau = 0.1 * static_cast<double>(it);
    if (gen.uniform() < 0.8) r.local_curvature = std::exp(gen.normal() * 5.0);
    t.records.push_back(r);
    it += 1 + gen.index(10);
    calls += gen.index(5);
    elapsed += gen.uniform() * 1e-3;
  }
  return t;
}

const Trace& find_trace(const std::vector<Trace>& traces, const std::string& solver) {
  for (const auto& t : traces) {
    if (t.solver == solver) return t;
  }
  throw std::runtime_error("no trace for " + solver);
}

}  // namespace

TEST(Format, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(1e-300), "1e-300");
  Gen gen(3);
  for (int i = 0; i < 2000; ++i) {
    const double v = gen.normal() * std::pow(10.0, gen.uniform(-308.0, 308.0));
    const auto back = parse_double(format_double(v));
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, v);
  }
  EXPECT_FALSE(parse_double("1.5x").has_value());
  EXPECT_FALSE(parse_unsigned("-3").has_value());
  EXPECT_EQ(parse_bool(" yes "), true);
}

TEST(Config, GrammarCommentsAndWhitespace) {
  const auto pairs = [] {
    std::istringstream in("  a.b = 1   # trailing\n\n# whole line\nc=  x y \n");
    return parse_key_values(in);
  }();
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs.at("a.b"), "1");
  EXPECT_EQ(pairs.at("c"), "x y");
}

TEST(Config, MalformedLinesAreRejected) {
  std::istringstream missing_eq("budget 10\n");
  EXPECT_THROW(parse_key_values(missing_eq), ConfigError);
  std::istringstream dup("budget = 1\nbudget = 2\n");
  EXPECT_THROW(parse_key_values(dup), ConfigError);
  std::istringstream empty_key(" = 2\n");
  EXPECT_THROW(parse_key_values(empty_key), ConfigError);
}

TEST(Config, BuildsTypedConfig) {
  const auto c = config_from(kSmallQp);
  EXPECT_EQ(c.budget, 60u);
  EXPECT_EQ(c.stride, 5u);
  ASSERT_EQ(c.problems.size(), 1u);
  EXPECT_EQ(c.problems[0].family, ProblemFamily::QP);
  EXPECT_EQ(c.problems[0].m, 20u);
  ASSERT_EQ(c.solvers.size(), 3u);
  const auto& adaptive = *std::find_if(c.solvers.begin(), c.solvers.end(),
                                       [](const SolverSpec& s) { return s.name == "adaptive"; });
  ASSERT_TRUE(std::holds_alternative<AdaptivePolicy>(adaptive.acfgm.policy));
  EXPECT_EQ(std::get<AdaptivePolicy>(adaptive.acfgm.policy).alpha, 0.1);
}

TEST(Config, InvalidConfigsRaise) {
  const std::string base = kSmallQp;
  EXPECT_THROW(config_from(base, {"budget=0"}), ConfigError);
  EXPECT_THROW(config_from(base, {"stride=0"}), ConfigError);
  EXPECT_THROW(config_from(base, {"bogus=1"}), ConfigError);
  EXPECT_THROW(config_from(base, {"solver.simple.alpha=0.5"}), ConfigError);
  EXPECT_THROW(config_from(base, {"solver.adaptive.alpha=1.5"}), ConfigError);
  EXPECT_THROW(config_from(base, {"solver.simple.method=newton"}), ConfigError);
  EXPECT_THROW(config_from(base, {"solver.fgm.accelerate=true"}), ConfigError);
  EXPECT_THROW(config_from(base, {"problem.qp.penalty=lasso:0.1"}), ConfigError);
  EXPECT_THROW(config_from(base, {"problem.qp.family=lasso"}), ConfigError);  // penalty missing
  EXPECT_THROW(config_from(base, {"problem.qp.m=abc"}), ConfigError);
  EXPECT_THROW(config_from(base, {"solver.x=1"}), ConfigError);
  EXPECT_THROW(config_from("budget = 5\nproblem.qp.family = qp\n"), ConfigError);  // no solver
  EXPECT_THROW(config_from("budget = 5\nsolver.s.method = acfgm\n"), ConfigError);  // no problem
}

TEST(Config, OverridesReplaceFileValues) {
  const auto c = config_from(kSmallQp, {"budget=7", "solver.adaptive.alpha = 0.5"});
  EXPECT_EQ(c.budget, 7u);
  EXPECT_NE(config_hash(c), config_hash(config_from(kSmallQp)));
}

TEST(ConfigHash, OrderInsensitiveProperty) {
  std::vector<std::string> lines;
  std::istringstream in(kSmallQp);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  const std::string expected = config_hash(config_from(kSmallQp));
  Gen gen(17);
  for (int trial = 0; trial < 25; ++trial) {
    for (std::size_t i = lines.size(); i > 1; --i) std::swap(lines[i - 1], lines[gen.index(i)]);
    std::string text;
    for (const auto& l : lines) text += l + "\n";
    EXPECT_EQ(config_hash(config_from(text)), expected);
  }
}

TEST(ConfigHash, IgnoresOutputAndJobsAndSpelling) {
  const std::string h = config_hash(config_from(kSmallQp));
  EXPECT_EQ(config_hash(config_from(kSmallQp, {"output.dir=/elsewhere", "jobs=4"})), h);
  EXPECT_EQ(config_hash(config_from(kSmallQp, {"output.format=csv"})), h);
  EXPECT_EQ(config_hash(config_from(kSmallQp, {"solver.adaptive.alpha=0.10"})), h);
  // Writing out a default explicitly does not change the resolved config.
  EXPECT_EQ(config_hash(config_from(kSmallQp, {"solver.simple.policy=simple"})), h);
  EXPECT_EQ(config_hash(config_from(kSmallQp, {"problem.qp.seed=4"})), h);
  EXPECT_EQ(h.size(), 16u);
}

TEST(ConfigHash, ChangesWithEveryMeaningfulField) {
  const std::string h = config_hash(config_from(kSmallQp));
  const std::vector<std::string> changes = {
      "budget=61",          "stride=6",
      "seed=5",             "problem.qp.m=21",
      "problem.qp.n=31",    "problem.qp.seed=9",
      "solver.adaptive.alpha=0.2", "solver.simple.beta=0.15",
      "solver.simple.init=line_search", "solver.simple.scale=0.3",
      "solver.fgm.epsilon=1e-8", "solver.fgm.gamma=3",
      "problem.qp.reference=0.5"};
  for (const auto& change : changes) {
    EXPECT_NE(config_hash(config_from(kSmallQp, {change})), h) << change;
  }
}

TEST(Trace, HeaderIsExact) {
  std::ostringstream out;
  write_csv(out, Trace{});
  EXPECT_EQ(out.str(), "iteration,oracle_calls,elapsed_seconds,objective,gap,eta,tau,L_local\n");
}

TEST(Trace, CsvRoundTripProperty) {
  Gen gen(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Trace t = random_trace(gen);
    std::stringstream io;
    write_csv(io, t);
    EXPECT_EQ(parse_csv(io), t.records);
  }
}

TEST(Trace, JsonRoundTripProperty) {
  Gen gen(6);
  for (int trial = 0; trial < 30; ++trial) {
    Trace t = random_trace(gen);
    t.diverged = gen.uniform() < 0.5;
    t.message = "line \"quoted\"";
    t.reference = gen.uniform() < 0.5 ? std::optional<double>(gen.normal()) : std::nullopt;
    std::stringstream io;
    write_json(io, t);
    const Trace back = parse_json(io);
    EXPECT_EQ(back.records, t.records);
    EXPECT_EQ(back.problem, t.problem);
    EXPECT_EQ(back.solver, t.solver);
    EXPECT_EQ(back.diverged, t.diverged);
    EXPECT_EQ(back.message, t.message);
    EXPECT_EQ(back.reference, t.reference);
    EXPECT_EQ(back.init_oracle_calls, t.init_oracle_calls);
  }
}

TEST(Trace, MissingGapIsEmptyNotZero) {
  Trace t;
  TraceRecord r;
  r.iteration = 3;
  r.oracle_calls = 4;
  r.objective = 1.5;
  r.eta = 0.25;
  t.records.push_back(r);
  std::ostringstream out;
  write_csv(out, t);
  EXPECT_NE(out.str().find("\n3,4,0,1.5,,0.25,,\n"), std::string::npos) << out.str();
}

TEST(Trace, ParseErrors) {
  std::istringstream bad_header("iteration,objective\n");
  EXPECT_THROW(parse_csv(bad_header), ParseError);
  std::istringstream short_row(std::string(kTraceHeader) + "\n1,2,3\n");
  EXPECT_THROW(parse_csv(short_row), ParseError);
  std::istringstream bad_value(std::string(kTraceHeader) + "\n1,2,0,x,,,,\n");
  EXPECT_THROW(parse_csv(bad_value), ParseError);
}

TEST(Trace, MonotonicityCheck) {
  Trace t;
  t.records.resize(2);
  t.records[1].iteration = 1;
  EXPECT_NO_THROW(check_monotone(t));
  t.records[1].iteration = 0;
  EXPECT_THROW(check_monotone(t), InvalidInput);
  t.records[1].iteration = 1;
  t.records[0].oracle_calls = 3;
  EXPECT_THROW(check_monotone(t), InvalidInput);
}

TEST(Runner, KnownSolutionUsesZeroReference) {
  const auto traces = run_experiment(config_from(kSmallQp));
  ASSERT_EQ(traces.size(), 3u);
  for (const auto& t : traces) {
    ASSERT_TRUE(t.reference.has_value());
    EXPECT_EQ(*t.reference, 0.0);
    EXPECT_EQ(t.reference_source, "known");
    for (const auto& r : t.records) {
      ASSERT_TRUE(r.gap.has_value());
      EXPECT_EQ(*r.gap, r.objective);
    }
  }
}

TEST(Runner, TracesAreSortedMonotoneAndStrided) {
  const auto traces = run_experiment(config_from(kSmallQp));
  for (std::size_t i = 1; i < traces.size(); ++i) {
    EXPECT_LT(traces[i - 1].run_key(), traces[i].run_key());
  }
  for (const auto& t : traces) {
    EXPECT_FALSE(t.diverged) << t.message;
    EXPECT_NO_THROW(check_monotone(t));
    ASSERT_EQ(t.records.size(), 13u);  // 0, 5, ..., 60
    EXPECT_EQ(t.records.front().iteration, 0u);
    EXPECT_EQ(t.records.back().iteration, 60u);
    EXPECT_EQ(t.config_hash, config_hash(config_from(kSmallQp)));
  }
}

TEST(Runner, FinalIterationIsAlwaysRecorded) {
  const auto traces = run_experiment(config_from(kSmallQp, {"budget=13"}));
  for (const auto& t : traces) {
    EXPECT_EQ(t.records.back().iteration, 13u);
    EXPECT_EQ(t.records[t.records.size() - 2].iteration, 10u);
  }
}

TEST(Runner, MinOverSolversReference) {
  const std::string text = R"(
budget = 80
stride = 4
problem.l.family = lasso
problem.l.m = 30
problem.l.n = 40
problem.l.seed = 2
problem.l.penalty = lasso:0.1
solver.a.method = acfgm
solver.b.method = nspgm
solver.c.method = adgd
)";
  const auto traces = run_experiment(config_from(text));
  double best = std::numeric_limits<double>::infinity();
  for (const auto& t : traces) {
    for (const auto& r : t.records) best = std::min(best, r.objective);
  }
  bool hit = false;
  for (const auto& t : traces) {
    ASSERT_TRUE(t.reference.has_value());
    EXPECT_EQ(*t.reference, best);
    EXPECT_EQ(t.reference_source, "min_over_solvers");
    for (const auto& r : t.records) {
      ASSERT_TRUE(r.gap.has_value());
      EXPECT_GE(*r.gap, 0.0);
      hit = hit || *r.gap == 0.0;
    }
  }
  EXPECT_TRUE(hit);
}

TEST(Runner, ConfiguredReferenceWins) {
  const auto traces = run_experiment(config_from(kSmallQp, {"problem.qp.reference=-1"}));
  for (const auto& t : traces) {
    EXPECT_EQ(t.reference, -1.0);
    EXPECT_EQ(t.reference_source, "config");
  }
}

TEST(Runner, RunSingleLeavesGapEmpty) {
  const auto config = config_from(kSmallQp);
  const auto problem = build_problem(config.problems[0], config.seed);
  const Trace t = run_single(config.solvers[0], problem, 10, 1);
  ASSERT_EQ(t.records.size(), 11u);
  for (const auto& r : t.records) EXPECT_FALSE(r.gap.has_value());
  std::ostringstream out;
  write_csv(out, t);
  std::istringstream in(out.str());
  for (const auto& r : parse_csv(in)) EXPECT_FALSE(r.gap.has_value());
}

TEST(Runner, IdenticalSolverConfigsGiveIdenticalColumns) {
  const std::string text = std::string(kSmallQp) +
                           "solver.twin.method = acfgm\nsolver.twin.policy = adaptive\n"
                           "solver.twin.alpha = 0.1\n";
  const auto traces = run_experiment(config_from(text));
  const auto& a = find_trace(traces, "adaptive");
  const auto& b = find_trace(traces, "twin");
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].objective, b.records[i].objective);
    EXPECT_EQ(a.records[i].eta, b.records[i].eta);
    EXPECT_EQ(a.records[i].tau, b.records[i].tau);
    EXPECT_EQ(a.records[i].oracle_calls, b.records[i].oracle_calls);
  }
}

TEST(Runner, RerunAndJobsReproduceNonTimingColumns) {
  const auto config = config_from(kSmallQp);
  const auto first = run_experiment(config, 1);
  const auto second = run_experiment(config, 3);
  ASSERT_EQ(first.size(), second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    ASSERT_EQ(first[i].run_key(), second[i].run_key());
    ASSERT_EQ(first[i].records.size(), second[i].records.size());
    for (std::size_t j = 0; j < first[i].records.size(); ++j) {
      auto a = first[i].records[j], b = second[i].records[j];
      a.elapsed_seconds = b.elapsed_seconds = 0.0;
      EXPECT_EQ(a, b);
    }
  }
}

TEST(Runner, DivergenceIsIsolated) {
  // Line search that cannot succeed within one trial.
  const auto traces = run_experiment(config_from(
      kSmallQp, {"solver.bad.method=acfgm", "solver.bad.init=line_search",
                 "solver.bad.max_trials=1", "solver.bad.start_multiplier=1e12"}));
  const auto& bad = find_trace(traces, "bad");
  EXPECT_TRUE(bad.diverged);
  EXPECT_FALSE(bad.message.empty());
  for (const char* name : {"simple", "adaptive", "fgm"}) {
    const auto& t = find_trace(traces, name);
    EXPECT_FALSE(t.diverged);
    EXPECT_EQ(t.records.back().iteration, 60u);
  }
}

TEST(Runner, MidRunDivergenceTruncatesTrace) {
  // Gradient turns NaN once x leaves the start neighbourhood.
  BuiltProblem built;
  built.name = "trap";
  built.x0 = DenseVector(std::vector<double>{0.0, 0.0});
  built.problem = std::make_shared<CompositeProblem>(
      2,
      [](const DenseVector& x) {
        SmoothEval e;
        const double d0 = x[0] - 1.0, d1 = x[1] - 1.0;
        e.value = d0 * d0 + d1 * d1;
        e.gradient = DenseVector(std::vector<double>{2.0 * d0, 2.0 * d1});
        if (x[0] > 0.5) e.value = std::numeric_limits<double>::quiet_NaN();
        return e;
      },
      ProxTerm::zero(), "trap",
      [](const DenseVector& x) { return (x[0] - 1.0) * (x[0] - 1.0) + (x[1] - 1.0) * (x[1] - 1.0); });
  SolverSpec spec;
  spec.name = "s";
  const Trace t = run_single(spec, built, 100, 1);
  EXPECT_TRUE(t.diverged);
  ASSERT_FALSE(t.records.empty());
  EXPECT_LT(t.records.back().iteration, 100u);
  EXPECT_NO_THROW(check_monotone(t));
}

TEST(Runner, UnreadableDataIsDataError) {
  const std::string text =
      "problem.f.family = least_squares\nproblem.f.path = /nonexistent/file.svm\n"
      "solver.s.method = acfgm\n";
  EXPECT_THROW(run_experiment(config_from(text)), DataError);
  // Generator settings make no sense next to a data file.
  EXPECT_THROW(config_from(kSmallQp, {"problem.qp.path=/some/file.svm"}), ConfigError);
}

TEST(Runner, LogisticRequiresBinaryLabels) {
  const auto config = config_from(
      kSmallQp, {"problem.qp.family=logistic", "problem.qp.generator=regression",
                 "problem.qp.penalty=sup:0.01"});
  EXPECT_THROW(run_experiment(config), DataError);
}

TEST(Runner, SqrtLassoNeedsExplicitLipschitzForNsAgd) {
  const std::string text = R"(
budget = 5
problem.s.family = sqrt_lasso
problem.s.m = 20
problem.s.n = 10
problem.s.penalty = sqrt_lasso:1
solver.agd.method = nsagd
)";
  EXPECT_THROW(run_experiment(config_from(text)), ConfigError);
  EXPECT_NO_THROW(run_experiment(config_from(text, {"problem.s.lipschitz=10"})));
}

TEST(Runner, HoelderTraceCarriesLastIterateObjective) {
  const std::string text = R"(
budget = 50
stride = 10
problem.s.family = sqrt_lasso
problem.s.m = 40
problem.s.n = 10
problem.s.penalty = sqrt_lasso:1.1
solver.h.method = acfgm
solver.h.policy = hoelder
solver.h.epsilon = 1e-4
solver.s.method = acfgm
)";
  const auto traces = run_experiment(config_from(text));
  EXPECT_TRUE(find_trace(traces, "h").final_last_objective.has_value());
  EXPECT_FALSE(find_trace(traces, "s").final_last_objective.has_value());
}

TEST(Export, WritesOneFilePerPairAndLoadsBack) {
  const auto traces = run_experiment(config_from(kSmallQp));
  const auto dir = scratch_dir("export");
  const auto paths = export_traces(traces, dir, {ExportFormat::CSV, ExportFormat::JSON});
  EXPECT_EQ(paths.size(), 2 * traces.size());
  for (const auto& t : traces) {
    std::ifstream csv(dir / (t.run_key() + ".csv"));
    ASSERT_TRUE(csv.good());
    EXPECT_EQ(parse_csv(csv), t.records);
  }
  const auto loaded = load_traces(dir);
  ASSERT_EQ(loaded.size(), traces.size());
  for (std::size_t i = 0; i < loaded.size(); ++i) {
    EXPECT_EQ(loaded[i].records, traces[i].records);
    EXPECT_EQ(loaded[i].init_oracle_calls, traces[i].init_oracle_calls);
    EXPECT_EQ(loaded[i].method, traces[i].method);
  }
  std::filesystem::remove_all(dir);
}

TEST(Export, CsvOnlyDirectoryLoads) {
  const auto traces = run_experiment(config_from(kSmallQp));
  const auto dir = scratch_dir("csvonly");
  export_traces(traces, dir, {ExportFormat::CSV});
  const auto loaded = load_traces(dir);
  ASSERT_EQ(loaded.size(), traces.size());
  for (std::size_t i = 0; i < loaded.size(); ++i) {
    EXPECT_EQ(loaded[i].problem, traces[i].problem);
    EXPECT_EQ(loaded[i].solver, traces[i].solver);
    EXPECT_EQ(loaded[i].records, traces[i].records);
  }
  std::filesystem::remove_all(dir);
}

TEST(Export, UnwritablePathIsDataError) {
  const auto dir = scratch_dir("blocked");
  std::filesystem::create_directories(dir);
  const auto file = dir / "plain_file";
  std::ofstream(file) << "x";
  Trace t;
  t.problem = "p";
  t.solver = "s";
  EXPECT_THROW(export_traces({t}, file / "sub", {ExportFormat::CSV}), DataError);
  EXPECT_THROW(load_traces(file), DataError);
  std::filesystem::remove_all(dir);
}

TEST(Summary, EmptyInputGivesEmptyTable) {
  const auto rows = summarize({});
  EXPECT_TRUE(rows.empty());
  std::ostringstream table, csv;
  write_summary_table(table, rows);
  write_summary_csv(csv, rows);
  const std::string t = table.str(), c = csv.str();
  EXPECT_EQ(std::count(t.begin(), t.end(), '\n'), 1);
  EXPECT_EQ(std::count(c.begin(), c.end(), '\n'), 1);
}

TEST(Summary, AcFgmUsesExactlyOneCallPerIteration) {
  for (const char* init : {"from_l0", "line_search"}) {
    const auto traces =
        run_experiment(config_from(kSmallQp, {std::string("solver.simple.init=") + init}));
    for (const auto& row : summarize(traces)) {
      if (row.method == "AC-FGM") EXPECT_EQ(row.calls_per_iteration, 1.0) << init;
    }
  }
}

TEST(Summary, NsFgmCallsAreTwicePerTrial) {
  const auto config = config_from(kSmallQp);
  const auto built = build_problem(config.problems[0], config.seed);
  NsFgmMethod method(built.problem, built.x0);
  Trace t;
  t.method = method.name();
  t.init_oracle_calls = method.init_oracle_calls();
  t.records.push_back({0, method.oracle_calls(), 0.0, method.report().objective, {}, {}, {}, {}});
  std::size_t trials = 0;
  const std::size_t k = 200;
  while (method.iteration() < k) {
    method.step();
    trials += method.state().last_trials;
  }
  t.records.push_back({k, method.oracle_calls(), 1.0, method.report().objective, {}, {}, {}, {}});
  const auto rows = summarize({t});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_DOUBLE_EQ(rows[0].calls_per_iteration, 2.0 * static_cast<double>(trials) / k);
  EXPECT_DOUBLE_EQ(rows[0].cpu_per_1000, 1000.0 / k);
}

TEST(Summary, TableColumnsAreAligned) {
  const auto rows = summarize(run_experiment(config_from(kSmallQp)));
  std::ostringstream out;
  write_summary_table(out, rows);
  std::istringstream in(out.str());
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  ASSERT_EQ(lines.size(), rows.size() + 1);
  const auto end_of = [](const std::string& line, const std::string& token) {
    return line.find(token) + token.size();
  };
  const auto col = end_of(lines[0], "calls/it");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    EXPECT_EQ(lines[i].substr(col - 5, 5).find_first_not_of("0123456789."), std::string::npos)
        << lines[i];
    EXPECT_EQ(lines[i][col], ' ');
  }
}

TEST(Summary, DivergedRunWithoutRecordsIsListed) {
  Trace t;
  t.problem = "p";
  t.solver = "s";
  t.diverged = true;
  const auto rows = summarize({t, Trace{}});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].status, "diverged");
  EXPECT_FALSE(rows[0].final_gap.has_value());
  std::ostringstream csv;
  write_summary_csv(csv, rows);
  EXPECT_NE(csv.str().find("p,s,,0,0,0,,,diverged"), std::string::npos) << csv.str();
}
