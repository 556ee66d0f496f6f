// Acceptance checks. Prints one PASS/FAIL line per criterion. Exits nonzero
// on an internal error, or with --strict when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "acfgm/baselines/adgd.hpp"
#include "acfgm/baselines/nsagd.hpp"
#include "acfgm/baselines/nsfgm.hpp"
#include "acfgm/baselines/nspgm.hpp"
#include "acfgm/core/errors.hpp"
#include "acfgm/problems/generators.hpp"
#include "acfgm/problems/oracles.hpp"
#include "acfgm/problems/penalty.hpp"
#include "acfgm/solver/acfgm.hpp"
#include "acfgm/solver/certificate.hpp"
#include "acfgm/solver/schedule.hpp"
#include "../support/counting.hpp"

using namespace acfgm;

namespace {

// Bounds that hold with equality in exact arithmetic get this relative slack.
constexpr double kRoundoff = 1e-10;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v, const char* f = "%.3g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double rel_diff(double a, double b) {
  const double s = std::max({std::abs(a), std::abs(b), 1e-300});
  return a == b ? 0.0 : std::abs(a - b) / s;
}

// ---------------------------------------------------------------------------
// Oracle accounting, checked on every run below.

enum class CallRule { OnePerIteration, TwicePerTrial, OncePerTrial };

struct AccountingLog {
  std::size_t runs = 0;
  std::size_t iterations = 0;
  std::vector<std::string> violations;
  std::vector<double> nsfgm_qp_rates;  // calls per iteration on the QP family
} accounting;

CallRule rule_for(const IterativeMethod& m) {
  if (dynamic_cast<const NsFgmMethod*>(&m)) return CallRule::TwicePerTrial;
  if (dynamic_cast<const NsPgmMethod*>(&m)) return CallRule::OncePerTrial;
  return CallRule::OnePerIteration;
}

std::size_t last_trials(const IterativeMethod& m) {
  if (const auto* f = dynamic_cast<const NsFgmMethod*>(&m)) return f->state().last_trials;
  if (const auto* p = dynamic_cast<const NsPgmMethod*>(&m)) return p->state().last_trials;
  return 1;
}

using Factory = std::function<std::unique_ptr<IterativeMethod>(std::shared_ptr<const CompositeProblem>)>;
using StepHook = std::function<void(const IterativeMethod&)>;

/// Runs `budget` iterations on a counting copy of `problem`, checking the
/// call accounting after every step. Returns the method.
std::unique_ptr<IterativeMethod> run_counted(const std::string& label,
                                             std::shared_ptr<const CompositeProblem> problem,
                                             const Factory& make, std::size_t budget,
                                             const StepHook& hook = {}) {
  auto c = acfgm::testing::counted(std::move(problem));
  auto method = make(c.problem);
  const CallRule rule = rule_for(*method);
  auto fail = [&](const std::string& what) {
    if (accounting.violations.size() < 20) {
      accounting.violations.push_back(label + " k=" + std::to_string(method->iteration()) + ": " + what);
    } else {
      accounting.violations.push_back("...");
    }
  };
  if (method->oracle_calls() != method->init_oracle_calls()) fail("start calls != init calls");
  if (*c.calls < method->oracle_calls()) fail("reported more calls than made");
  if (hook) hook(*method);
  while (method->iteration() < budget && !method->finished()) {
    const std::size_t reported_before = method->oracle_calls();
    const std::size_t counted_before = *c.calls;
    method->step();
    const std::size_t reported = method->oracle_calls() - reported_before;
    const std::size_t counted = *c.calls - counted_before;
    const std::size_t trials = last_trials(*method);
    const std::size_t expected = rule == CallRule::OnePerIteration ? 1
                                 : rule == CallRule::TwicePerTrial ? 2 * trials
                                                                   : trials;
    // A stationary stop costs nothing and is not an iteration.
    const bool idle_stop = method->finished() && reported == 0;
    if (!idle_stop && reported != expected) {
      fail("reported " + std::to_string(reported) + " calls, rule says " + std::to_string(expected));
    }
    // The first iteration may reuse a trial evaluated during initialization.
    if (method->iteration() > 1 && counted != reported) {
      fail("counted " + std::to_string(counted) + " calls, reported " + std::to_string(reported));
    }
    if (*c.calls != method->oracle_calls()) fail("cumulative count mismatch");
    ++accounting.iterations;
    if (hook) hook(*method);
  }
  ++accounting.runs;
  return method;
}

Factory acfgm_factory(const DenseVector& z0, const SolverConfig& config) {
  return [z0, config](std::shared_ptr<const CompositeProblem> p) -> std::unique_ptr<IterativeMethod> {
    return std::make_unique<AcFgmMethod>(std::move(p), z0, config, true);
  };
}

// ---------------------------------------------------------------------------
// Stepsize invariants, checked on every AC-FGM run below.

struct InvariantLog {
  std::size_t runs = 0;
  std::size_t checks = 0;
  std::vector<std::string> violations;
} invariants;

void note_invariant(const std::string& what) {
  if (invariants.violations.size() < 20) invariants.violations.push_back(what);
}

void check_invariants(const std::string& label, const AcFgmMethod& m) {
  const auto& h = m.history();
  const auto& policy = m.config().policy;
  ++invariants.runs;
  for (const auto& v : validate_schedule(h.eta, h.tau, h.curvature, m.config().beta)) {
    note_invariant(label + " t=" + std::to_string(v.iteration) + " " + v.condition);
  }
  bool simple = std::holds_alternative<SimplePolicy>(policy);
  std::optional<double> alpha;
  if (const auto* a = std::get_if<AdaptivePolicy>(&policy)) alpha = a->alpha;
  if (const auto* hp = std::get_if<HoelderPolicy>(&policy)) {
    simple = !hp->alpha.has_value();
    alpha = hp->alpha;
  }
  for (std::size_t i = 1; i < h.eta.size(); ++i) {
    const double t = static_cast<double>(i + 1);
    ++invariants.checks;
    if (simple) {
      if (h.eta[i] * (1.0 + kRoundoff) < t / (12.0 * h.hat_curvature[i - 1])) {
        note_invariant(label + " t=" + std::to_string(i + 1) + " eta below t/(12 hatL)");
      }
    } else if (alpha) {
      if (h.tau[i] > t / 2.0 * (1.0 + kRoundoff)) {
        note_invariant(label + " t=" + std::to_string(i + 1) + " tau above t/2");
      }
      if (h.eta[i] * (1.0 + kRoundoff) < (3.0 + *alpha * (t - 3.0)) / (12.0 * h.hat_curvature[i - 1])) {
        note_invariant(label + " t=" + std::to_string(i + 1) + " eta below (3+a(t-3))/(12 hatL)");
      }
    }
  }
}

// ---------------------------------------------------------------------------

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct QpInstance {
  std::shared_ptr<const Dataset> data;
  std::shared_ptr<const CompositeProblem> problem;
  double distance_sq = 0.0;  // ||z0 - x*||^2 with z0 = 0
};

std::vector<QpInstance> qp_instances() {
  std::vector<QpInstance> out;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto data = std::make_shared<const Dataset>(random_qp_instance(100, 200, seed));
    QpInstance inst;
    inst.distance_sq = norm_sq(*data->x_star);
    inst.problem = least_squares_oracle(data);
    inst.data = std::move(data);
    out.push_back(std::move(inst));
  }
  return out;
}

double loglog_slope(const std::vector<double>& gaps, std::size_t from, std::size_t to) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0, n = 0;
  for (std::size_t k = from; k <= to; ++k) {
    if (!(gaps[k] > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    const double x = std::log(static_cast<double>(k));
    const double y = std::log(gaps[k]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    n += 1;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// Criteria 1 and 2 share the runs on the QP family.
struct QpSweep {
  Outcome certificate, rate;
};

QpSweep qp_sweep(const std::vector<QpInstance>& instances) {
  QpSweep result;
  const std::vector<std::size_t> checkpoints = {10, 50, 100, 500, 1000};
  const std::size_t budget = 1000;

  // Criterion 1: Simple policy against its last-iterate certificate.
  auto start = Clock::now();
  std::size_t checks = 0, violations = 0;
  double worst_ratio = 0.0;
  std::vector<std::vector<double>> simple_gaps;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& inst = instances[i];
    const DenseVector z0(inst.data->cols());
    std::vector<double> gaps(budget + 1, 0.0);
    auto m = run_counted("qp" + std::to_string(i + 1) + "/simple", inst.problem,
                         acfgm_factory(z0, SolverConfig{}), budget,
                         [&](const IterativeMethod& method) {
                           const auto& ac = dynamic_cast<const AcFgmMethod&>(method);
                           const std::size_t k = ac.iteration();
                           gaps[k] = ac.report().objective;  // Psi* = 0
                           if (std::find(checkpoints.begin(), checkpoints.end(), k) == checkpoints.end()) return;
                           const auto cert = certificate(ac.state(), SimplePolicy{}, inst.distance_sq);
                           ++checks;
                           if (!cert.bound_last_iterate || gaps[k] > *cert.bound_last_iterate) {
                             ++violations;
                           } else {
                             worst_ratio = std::max(worst_ratio, gaps[k] / *cert.bound_last_iterate);
                           }
                         });
    check_invariants("qp" + std::to_string(i + 1) + "/simple", dynamic_cast<const AcFgmMethod&>(*m));
    simple_gaps.push_back(std::move(gaps));
  }
  const double t1 = seconds_since(start);
  result.certificate.pass = violations == 0 && checks == instances.size() * checkpoints.size() && t1 <= 60.0;
  result.certificate.detail = std::to_string(violations) + " violations in " + std::to_string(checks) +
                              " checks, max gap/bound " + fmt(worst_ratio) + ", " + fmt(t1, "%.1f") +
                              " s (limit 60 s)";

  // Criterion 2: slopes over [100, 1000].
  auto start2 = Clock::now();
  struct Variant {
    std::string name;
    PolicyKind policy;
  };
  const std::vector<Variant> variants = {{"adaptive0", AdaptivePolicy{0.0}},
                                         {"adaptive0.1", AdaptivePolicy{0.1}},
                                         {"adaptive0.5", AdaptivePolicy{0.5}}};
  double worst_accelerated = -std::numeric_limits<double>::infinity();
  std::string worst_label;
  bool accelerated_ok = true;
  const auto note_slope = [&](const std::string& label, double slope) {
    if (!(slope <= -1.5)) accelerated_ok = false;
    if (std::isnan(slope) || slope > worst_accelerated) {
      worst_accelerated = std::isnan(slope) ? std::numeric_limits<double>::infinity() : slope;
      worst_label = label;
    }
  };
  for (std::size_t i = 0; i < instances.size(); ++i) {
    note_slope("qp" + std::to_string(i + 1) + "/simple", loglog_slope(simple_gaps[i], 100, budget));
  }
  std::size_t gd_slow = 0;
  double gd_min = std::numeric_limits<double>::infinity(), gd_max = -gd_min;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& inst = instances[i];
    const DenseVector z0(inst.data->cols());
    for (const auto& v : variants) {
      SolverConfig config;
      config.policy = v.policy;
      std::vector<double> gaps(budget + 1, 0.0);
      const std::string label = "qp" + std::to_string(i + 1) + "/" + v.name;
      auto m = run_counted(label, inst.problem, acfgm_factory(z0, config), budget,
                           [&](const IterativeMethod& method) {
                             gaps[method.iteration()] = method.report().objective;
                           });
      check_invariants(label, dynamic_cast<const AcFgmMethod&>(*m));
      note_slope(label, loglog_slope(gaps, 100, budget));
    }
    // Fixed-step gradient descent reference.
    const double lipschitz = least_squares_lipschitz(*inst.data);
    std::vector<double> gaps(budget + 1, 0.0);
    run_counted("qp" + std::to_string(i + 1) + "/gd", inst.problem,
                [&](std::shared_ptr<const CompositeProblem> p) -> std::unique_ptr<IterativeMethod> {
                  return std::make_unique<NsAgdMethod>(std::move(p), z0, NsAgdOptions{lipschitz, false});
                },
                budget, [&](const IterativeMethod& method) { gaps[method.iteration()] = method.report().objective; });
    const double slope = loglog_slope(gaps, 100, budget);
    if (slope >= -1.3) ++gd_slow;
    gd_min = std::min(gd_min, slope);
    gd_max = std::max(gd_max, slope);
  }
  const double t2 = seconds_since(start2) + t1;
  const bool gd_ok = 2 * gd_slow >= instances.size();
  result.rate.pass = accelerated_ok && gd_ok && t2 <= 300.0;
  result.rate.detail = "AC-FGM worst slope " + fmt(worst_accelerated, "%.3f") + " (" + worst_label +
                       ", need <= -1.5); GD slope >= -1.3 on " + std::to_string(gd_slow) + "/" +
                       std::to_string(instances.size()) + " (range " + fmt(gd_min, "%.3f") + ".." +
                       fmt(gd_max, "%.3f") + "), " + fmt(t2, "%.1f") + " s (limit 300 s)";
  return result;
}

// Criterion 4.
Outcome policy_equivalence() {
  struct Case {
    std::string name;
    std::shared_ptr<const CompositeProblem> problem;
    std::size_t n;
  };
  std::vector<Case> cases;
  for (std::uint64_t seed : {401, 402}) {
    auto d = std::make_shared<const Dataset>(random_qp_instance(80, 120, seed));
    cases.push_back({"qp" + std::to_string(seed), least_squares_oracle(d), d->cols()});
  }
  {
    auto d = std::make_shared<const Dataset>(random_regression_instance(120, 200, 403));
    cases.push_back({"lasso403", lasso_oracle(d, resolve_penalty({PenaltyFamily::LassoFrac, 0.05}, *d)), d->cols()});
  }
  {
    auto d = std::make_shared<const Dataset>(random_regression_instance(150, 40, 404));
    cases.push_back({"ls404", least_squares_oracle(d), d->cols()});
  }
  {
    auto d = std::make_shared<const Dataset>(random_classification_instance(300, 60, 405));
    cases.push_back({"logistic405", logistic_oracle(d, resolve_penalty({PenaltyFamily::SupNormFrac, 0.01}, *d)), d->cols()});
  }
  const std::size_t budget = 500;
  double worst = 0.0;
  std::string where;
  std::size_t compared = 0;
  bool lengths_ok = true;
  for (const auto& c : cases) {
    const DenseVector z0(c.n);
    std::vector<double> obj_s, obj_a;
    SolverConfig simple;
    SolverConfig adaptive;
    adaptive.policy = AdaptivePolicy{1.0};
    auto ms = run_counted(c.name + "/simple", c.problem, acfgm_factory(z0, simple), budget,
                          [&](const IterativeMethod& m) { obj_s.push_back(m.report().objective); });
    auto ma = run_counted(c.name + "/adaptive1", c.problem, acfgm_factory(z0, adaptive), budget,
                          [&](const IterativeMethod& m) { obj_a.push_back(m.report().objective); });
    const auto& s = dynamic_cast<const AcFgmMethod&>(*ms);
    const auto& a = dynamic_cast<const AcFgmMethod&>(*ma);
    check_invariants(c.name + "/simple", s);
    check_invariants(c.name + "/adaptive1", a);
    const auto& hs = s.history();
    const auto& ha = a.history();
    if (hs.eta.size() != ha.eta.size() || obj_s.size() != obj_a.size()) {
      lengths_ok = false;
      continue;
    }
    const auto track = [&](double d, const std::string& label) {
      ++compared;
      if (d > worst) {
        worst = d;
        where = label;
      }
    };
    for (std::size_t i = 0; i < hs.eta.size(); ++i) {
      track(rel_diff(hs.eta[i], ha.eta[i]), c.name + " eta t=" + std::to_string(i + 1));
      track(rel_diff(hs.tau[i], ha.tau[i]), c.name + " tau t=" + std::to_string(i + 1));
    }
    for (std::size_t i = 0; i < obj_s.size(); ++i) {
      track(rel_diff(obj_s[i], obj_a[i]), c.name + " Psi k=" + std::to_string(i));
    }
  }
  Outcome o;
  o.pass = lengths_ok && worst <= 1e-12;
  o.detail = std::to_string(cases.size()) + " problems, " + std::to_string(compared) +
             " values compared, max relative difference " + fmt(worst) +
             (where.empty() ? "" : " at " + where) + " (limit 1e-12)" +
             (lengths_ok ? "" : ", trace lengths differ");
  return o;
}

// Criterion 5.
Outcome hoelder_mode() {
  auto start = Clock::now();
  auto data = std::make_shared<const Dataset>(random_regression_instance(200, 50, 501));
  const double lambda = resolve_penalty({PenaltyFamily::SqrtLassoQuantile, 1.1}, *data);
  auto problem = sqrt_lasso_oracle(data, lambda);
  const double epsilon = 1e-6;
  SolverConfig config;
  config.policy = HoelderPolicy{epsilon, std::nullopt};
  const DenseVector z0(data->cols());

  // Reference: best point seen over a long run, last and averaged iterates.
  double reference = std::numeric_limits<double>::infinity();
  DenseVector best = z0;
  auto ref = run_counted("sqrt_lasso/reference", problem, acfgm_factory(z0, config), 100000,
                         [&](const IterativeMethod& m) {
                           const auto& ac = dynamic_cast<const AcFgmMethod&>(m);
                           if (ac.iteration() == 0) return;
                           const double last = ac.state().value + problem->prox_term().evaluate(ac.state().x);
                           if (last < reference) {
                             reference = last;
                             best = ac.state().x;
                           }
                           const DenseVector avg = averaged_iterate(ac.state());
                           const double a = problem->objective(avg);
                           if (a < reference) {
                             reference = a;
                             best = avg;
                           }
                         });
  check_invariants("sqrt_lasso/reference", dynamic_cast<const AcFgmMethod&>(*ref));
  const double distance_sq = acfgm::distance_sq(z0, best);

  const std::size_t budget = 10000;
  std::size_t checks = 0, violations = 0;
  double worst_ratio = 0.0, final_gap = 0.0;
  auto m = run_counted("sqrt_lasso/hoelder", problem, acfgm_factory(z0, config), budget,
                       [&](const IterativeMethod& method) {
                         const auto& ac = dynamic_cast<const AcFgmMethod&>(method);
                         const std::size_t k = ac.iteration();
                         if (k == 0 || (k > 100 && k % 10 != 0)) return;
                         const double gap = ac.report().objective - reference;
                         const auto cert = certificate(ac.state(), config.policy, distance_sq);
                         ++checks;
                         final_gap = gap;
                         if (!cert.bound_avg_iterate || gap > *cert.bound_avg_iterate) {
                           ++violations;
                         } else {
                           worst_ratio = std::max(worst_ratio, gap / *cert.bound_avg_iterate);
                         }
                       });
  check_invariants("sqrt_lasso/hoelder", dynamic_cast<const AcFgmMethod&>(*m));
  const double t = seconds_since(start);
  Outcome o;
  o.pass = violations == 0 && checks > 0 && t <= 180.0;
  o.detail = std::to_string(violations) + " violations in " + std::to_string(checks) +
             " logged iterates, max gap/bound " + fmt(worst_ratio) + ", final gap " + fmt(final_gap) +
             ", Psi*_ref " + fmt(reference, "%.12g") + ", " + fmt(t, "%.1f") + " s (limit 180 s)";
  return o;
}

// Criterion 6 sweep: the baselines on the QP family and the composite families.
void baseline_sweep(const std::vector<QpInstance>& instances) {
  const std::size_t budget = 1000;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& inst = instances[i];
    const DenseVector z0(inst.data->cols());
    const std::string tag = "qp" + std::to_string(i + 1);
    run_counted(tag + "/adgd", inst.problem,
                [&](auto p) -> std::unique_ptr<IterativeMethod> { return std::make_unique<AdgdMethod>(p, z0); },
                budget);
    auto f = run_counted(tag + "/nsfgm", inst.problem,
                         [&](auto p) -> std::unique_ptr<IterativeMethod> { return std::make_unique<NsFgmMethod>(p, z0); },
                         budget);
    accounting.nsfgm_qp_rates.push_back(
        static_cast<double>(f->oracle_calls() - f->init_oracle_calls()) / static_cast<double>(f->iteration()));
    run_counted(tag + "/nspgm", inst.problem,
                [&](auto p) -> std::unique_ptr<IterativeMethod> { return std::make_unique<NsPgmMethod>(p, z0); },
                budget);
    const double lipschitz = least_squares_lipschitz(*inst.data);
    run_counted(tag + "/nsagd", inst.problem,
                [&](auto p) -> std::unique_ptr<IterativeMethod> {
                  return std::make_unique<NsAgdMethod>(p, z0, NsAgdOptions{lipschitz, true});
                },
                budget);
  }
}

Outcome oracle_accounting() {
  Outcome o;
  const auto& r = accounting.nsfgm_qp_rates;
  double mean = 0.0;
  for (double v : r) mean += v;
  mean = r.empty() ? 0.0 : mean / static_cast<double>(r.size());
  const double lo = r.empty() ? 0.0 : *std::min_element(r.begin(), r.end());
  const double hi = r.empty() ? 0.0 : *std::max_element(r.begin(), r.end());
  o.pass = accounting.violations.empty() && !r.empty() && mean >= 3.0 && mean <= 5.0;
  o.detail = std::to_string(accounting.runs) + " runs, " + std::to_string(accounting.iterations) +
             " iterations, " + std::to_string(accounting.violations.size()) +
             " accounting violations; NS-FGM on QP " + fmt(mean, "%.3f") + " calls/iteration (range " +
             fmt(lo, "%.3f") + ".." + fmt(hi, "%.3f") + ", need [3, 5])";
  for (const auto& v : accounting.violations) o.detail += "\n      " + v;
  return o;
}

// Criterion 7.
Outcome ablation() {
  struct Case {
    std::string name;
    std::shared_ptr<const CompositeProblem> problem;
    std::size_t n;
    PolicyKind policy;
  };
  std::vector<Case> cases;
  {
    auto d = std::make_shared<const Dataset>(random_regression_instance(200, 500, 701, 0.05));
    cases.push_back({"lasso", lasso_oracle(d, resolve_penalty({PenaltyFamily::LassoFrac, 0.01}, *d)),
                     d->cols(), AdaptivePolicy{0.1}});
  }
  {
    auto d = std::make_shared<const Dataset>(random_regression_instance(200, 50, 702));
    cases.push_back({"sqrt_lasso",
                     sqrt_lasso_oracle(d, resolve_penalty({PenaltyFamily::SqrtLassoQuantile, 1.1}, *d)),
                     d->cols(), HoelderPolicy{1e-6, std::nullopt}});
  }
  {
    auto d = std::make_shared<const Dataset>(random_classification_instance(500, 100, 703));
    cases.push_back({"logistic",
                     logistic_oracle(d, resolve_penalty({PenaltyFamily::SupNormFrac, 0.005}, *d)),
                     d->cols(), AdaptivePolicy{0.1}});
  }
  const std::size_t budget = 1000;
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    const DenseVector z0(c.n);
    SolverConfig control;
    control.policy = c.policy;
    control.init = FromL0{std::nullopt, 0.4};
    SolverConfig experiment = control;
    FirstIterLineSearch ls;
    ls.gamma = 1.5;
    ls.start_multiplier = 10.0;
    experiment.init = ls;

    double reference = std::numeric_limits<double>::infinity();
    const auto track = [&](const IterativeMethod& m) { reference = std::min(reference, m.report().objective); };
    auto mc = run_counted(c.name + "/from_l0", c.problem, acfgm_factory(z0, control), budget, track);
    auto me = run_counted(c.name + "/line_search", c.problem, acfgm_factory(z0, experiment), budget, track);
    auto mr = run_counted(c.name + "/reference", c.problem, acfgm_factory(z0, control), 10 * budget, track);
    for (const auto* m : {mc.get(), me.get(), mr.get()}) {
      check_invariants(c.name + "/ablation", dynamic_cast<const AcFgmMethod&>(*m));
    }
    const double gc = mc->report().objective - reference;
    const double ge = me->report().objective - reference;
    const double ratio = std::max(gc, ge) / std::min(gc, ge);
    const auto trials = dynamic_cast<const AcFgmMethod&>(*me).state().init_trials;
    const bool case_ok = std::isfinite(ratio) && ratio < 10.0 && trials >= 2;
    ok = ok && case_ok;
    detail += (detail.empty() ? "" : "; ") + c.name + " gap " + fmt(gc) + " vs " + fmt(ge) +
              " (ratio " + fmt(ratio) + ", " + std::to_string(trials) + " trials)";
  }
  return {ok, detail + " (need ratio < 10, >= 2 trials)"};
}

// Criterion 8: named unit and property suites.
Outcome unit_suites() {
  struct Suite {
    std::string what;
    std::string binary;
    std::string filter;
  };
  const std::vector<Suite> suites = {
      {"prox KKT", ACFGM_TEST_CORE, "Prox*.*"},
      {"finite differences", ACFGM_TEST_PROBLEMS, "OracleProperty.FiniteDifferenceGradients"},
      {"convexity sampling", ACFGM_TEST_PROBLEMS, "OracleProperty.MidpointConvexity"},
      {"convexity sampling (prox terms)", ACFGM_TEST_CORE, "ProxProperty.TermsAreMidpointConvex"},
      {"LIBSVM round trips", ACFGM_TEST_PROBLEMS, "Libsvm*.*"},
      {"averaged iterate brute force", ACFGM_TEST_SOLVER, "Averaging*.*"},
      {"inverse normal CDF", ACFGM_TEST_PROBLEMS, "Quantile*.*"},
  };
  bool ok = true;
  std::string detail;
  for (const auto& s : suites) {
    const std::string cmd = "\"" + s.binary + "\" --gtest_filter='" + s.filter + "' > /dev/null 2>&1";
    const bool pass = std::system(cmd.c_str()) == 0;
    ok = ok && pass;
    detail += (detail.empty() ? "" : ", ") + s.what + (pass ? " ok" : " FAILED");
  }
  const double q = normal_quantile(0.975);
  const bool quantile_ok = std::abs(q - 1.959963984540054) <= 1e-6;
  ok = ok && quantile_ok;
  detail += ", Phi^-1(0.975) = " + fmt(q, "%.12f") + (quantile_ok ? "" : " FAILED");
  return {ok, detail};
}

}  // namespace

int main(int argc, char** argv) {
  const bool strict = argc > 1 && std::string(argv[1]) == "--strict";
  std::cout << "acceptance: running (this takes a minute or two)\n" << std::flush;
  std::vector<std::pair<std::string, Outcome>> results(8);
  const auto instances = qp_instances();

  auto qp = qp_sweep(instances);
  results[0] = {"certificate compliance (smooth)", qp.certificate};
  results[1] = {"rate check", qp.rate};
  results[3] = {"policy equivalence", policy_equivalence()};
  results[4] = {"Hoelder mode certificate", hoelder_mode()};
  results[6] = {"ablation: first-iteration line search", ablation()};
  baseline_sweep(instances);
  results[5] = {"oracle accounting", oracle_accounting()};
  {
    Outcome o;
    o.pass = invariants.violations.empty() && invariants.runs > 0;
    o.detail = std::to_string(invariants.runs) + " AC-FGM runs, " + std::to_string(invariants.checks) +
               " iterations checked, " + std::to_string(invariants.violations.size()) + " violations";
    for (const auto& v : invariants.violations) o.detail += "\n      " + v;
    results[2] = {"stepsize invariants", o};
  }
  results[7] = {"unit and property suites", unit_suites()};

  std::size_t passed = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& [name, outcome] = results[i];
    if (outcome.pass) ++passed;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << name << ": "
              << outcome.detail << '\n';
  }
  std::cout << "acceptance: " << passed << "/" << results.size() << " criteria passed\n";
  return strict && passed != results.size() ? EXIT_FAILURE : EXIT_SUCCESS;
}
