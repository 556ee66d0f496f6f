// Python bindings: acfgm._core

#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "acfgm/baselines/baseline.hpp"
#include "acfgm/core/errors.hpp"
#include "acfgm/harness/config.hpp"
#include "acfgm/harness/runner.hpp"
#include "acfgm/harness/summary.hpp"
#include "acfgm/problems/generators.hpp"
#include "acfgm/problems/libsvm.hpp"
#include "acfgm/problems/oracles.hpp"
#include "acfgm/problems/penalty.hpp"
#include "acfgm/solver/acfgm.hpp"
#include "acfgm/solver/certificate.hpp"

namespace py = pybind11;
using namespace acfgm;

namespace {

using DatasetPtr = std::shared_ptr<const Dataset>;
using ProblemPtr = std::shared_ptr<const CompositeProblem>;

DenseVector to_vector(const std::vector<double>& v) { return DenseVector(v); }

PolicyKind make_policy(const std::string& policy, std::optional<double> alpha,
                       std::optional<double> epsilon) {
  if (policy == "simple") {
    if (alpha || epsilon) throw ConfigError("simple policy takes no alpha or epsilon");
    return SimplePolicy{};
  }
  if (policy == "adaptive") {
    if (epsilon) throw ConfigError("adaptive policy takes no epsilon");
    return AdaptivePolicy{alpha.value_or(0.1)};
  }
  if (policy == "hoelder") return HoelderPolicy{epsilon.value_or(1e-6), alpha};
  throw ConfigError("unknown policy '" + policy + "' (simple, adaptive, hoelder)");
}

InitStrategy make_init(const std::string& init, std::optional<double> eta1) {
  if (init == "from_l0") return FromL0{};
  if (init == "line_search") return FirstIterLineSearch{};
  if (init == "explicit") {
    if (!eta1) throw ConfigError("init='explicit' needs eta1");
    return ExplicitStep{*eta1};
  }
  throw ConfigError("unknown init '" + init + "' (from_l0, line_search, explicit)");
}

py::dict trace_dict(const harness::Trace& t) {
  py::dict d;
  d["problem"] = t.problem;
  d["solver"] = t.solver;
  d["method"] = t.method;
  d["settings"] = t.settings;
  d["config_hash"] = t.config_hash;
  d["init_oracle_calls"] = t.init_oracle_calls;
  d["reference"] = t.reference;
  d["diverged"] = t.diverged;
  d["stationary"] = t.stationary;
  d["message"] = t.message;
  py::list iteration, calls, elapsed, objective, gap, eta, tau, curvature;
  for (const auto& r : t.records) {
    iteration.append(r.iteration);
    calls.append(r.oracle_calls);
    elapsed.append(r.elapsed_seconds);
    objective.append(r.objective);
    gap.append(r.gap ? py::cast(*r.gap) : py::none());
    eta.append(r.eta ? py::cast(*r.eta) : py::none());
    tau.append(r.tau ? py::cast(*r.tau) : py::none());
    curvature.append(r.local_curvature ? py::cast(*r.local_curvature) : py::none());
  }
  d["iteration"] = iteration;
  d["oracle_calls"] = calls;
  d["elapsed_seconds"] = elapsed;
  d["objective"] = objective;
  d["gap"] = gap;
  d["eta"] = eta;
  d["tau"] = tau;
  d["L_local"] = curvature;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Auto-conditioned fast gradient method and baselines";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
  py::register_exception<DataError>(m, "DataError", base.ptr());
  py::register_exception<Diverged>(m, "Diverged", base.ptr());

  py::class_<Dataset, std::shared_ptr<Dataset>>(m, "Dataset")
      .def_property_readonly("rows", &Dataset::rows)
      .def_property_readonly("cols", &Dataset::cols)
      .def_readonly("name", &Dataset::name)
      .def_readonly("provenance", &Dataset::provenance)
      .def_property_readonly("b", [](const Dataset& d) { return d.b.to_vector(); })
      .def_property_readonly("x_star", [](const Dataset& d) -> std::optional<std::vector<double>> {
        if (!d.x_star) return std::nullopt;
        return d.x_star->to_vector();
      });

  m.def("random_qp_instance", [](std::size_t rows, std::size_t cols, std::uint64_t seed) {
    return std::make_shared<Dataset>(random_qp_instance(rows, cols, seed));
  }, py::arg("m"), py::arg("n"), py::arg("seed"));
  m.def("random_regression_instance",
        [](std::size_t rows, std::size_t cols, std::uint64_t seed, double sparsity, double noise) {
          return std::make_shared<Dataset>(random_regression_instance(rows, cols, seed, sparsity, noise));
        },
        py::arg("m"), py::arg("n"), py::arg("seed"), py::arg("sparsity") = 0.1, py::arg("noise") = 0.1);
  m.def("random_classification_instance",
        [](std::size_t rows, std::size_t cols, std::uint64_t seed, double density, double noise) {
          return std::make_shared<Dataset>(
              random_classification_instance(rows, cols, seed, density, noise));
        },
        py::arg("m"), py::arg("n"), py::arg("seed"), py::arg("density") = 1.0, py::arg("noise") = 0.1);
  m.def("read_libsvm",
        [](const std::string& path, bool binary) {
          LibsvmOptions options;
          options.labels = binary ? LabelMode::Binary : LabelMode::Regression;
          return std::make_shared<Dataset>(libsvm_read_file(path, options));
        },
        py::arg("path"), py::arg("binary") = false);
  m.def("write_libsvm", [](const Dataset& d) {
    std::ostringstream out;
    libsvm_write(out, d);
    return out.str();
  });
  m.def("resolve_penalty", [](const std::string& spec, const Dataset& d) {
    return resolve_penalty(parse_penalty(spec), d);
  }, py::arg("spec"), py::arg("data"));
  m.def("normal_quantile", &normal_quantile);
  m.def("least_squares_lipschitz", &least_squares_lipschitz);

  py::class_<CompositeProblem, std::shared_ptr<CompositeProblem>>(m, "Problem")
      .def_property_readonly("dimension", &CompositeProblem::dimension)
      .def_property_readonly("name", &CompositeProblem::name)
      .def("objective", [](const CompositeProblem& p, const std::vector<double>& x) {
        return p.objective(to_vector(x));
      })
      .def("evaluate", [](const CompositeProblem& p, const std::vector<double>& x) {
        auto e = p.evaluate(to_vector(x));
        return py::make_tuple(e.value, e.gradient.to_vector());
      }, "f(x) and a (sub)gradient");

  m.def("least_squares", [](DatasetPtr d) { return least_squares_oracle(std::move(d)); });
  m.def("lasso", [](DatasetPtr d, double lam) { return lasso_oracle(std::move(d), lam); },
        py::arg("data"), py::arg("lam"));
  m.def("sqrt_lasso", [](DatasetPtr d, double lam) { return sqrt_lasso_oracle(std::move(d), lam); },
        py::arg("data"), py::arg("lam"));
  m.def("logistic", [](DatasetPtr d, double lam) { return logistic_oracle(std::move(d), lam); },
        py::arg("data"), py::arg("lam"));

  py::class_<IterativeMethod>(m, "Method")
      .def_property_readonly("name", &IterativeMethod::name)
      .def_property_readonly("iteration", &IterativeMethod::iteration)
      .def_property_readonly("oracle_calls", &IterativeMethod::oracle_calls)
      .def_property_readonly("init_oracle_calls", &IterativeMethod::init_oracle_calls)
      .def_property_readonly("finished", &IterativeMethod::finished)
      .def_property_readonly("objective", [](const IterativeMethod& s) { return s.report().objective; })
      .def("solution", [](const IterativeMethod& s) { return s.solution().to_vector(); })
      .def("step", &IterativeMethod::step)
      .def("run", [](IterativeMethod& s, std::size_t iterations) {
        std::vector<double> objective;
        for (std::size_t i = 0; i < iterations && !s.finished(); ++i) {
          s.step();
          objective.push_back(s.report().objective);
        }
        return objective;
      }, py::arg("iterations"), "Runs up to `iterations` steps; returns the objective after each.");

  py::class_<AcFgmMethod, IterativeMethod>(m, "AcFgm")
      .def(py::init([](ProblemPtr problem, const std::vector<double>& x0, const std::string& policy,
                       std::optional<double> alpha, std::optional<double> epsilon,
                       std::optional<double> beta, const std::string& init,
                       std::optional<double> eta1) {
             SolverConfig config;
             config.policy = make_policy(policy, alpha, epsilon);
             if (beta) config.beta = *beta;
             config.init = make_init(init, eta1);
             validate(config);
             return std::make_unique<AcFgmMethod>(std::move(problem), to_vector(x0), config, true);
           }),
           py::arg("problem"), py::arg("x0"), py::arg("policy") = "simple",
           py::arg("alpha") = py::none(), py::arg("epsilon") = py::none(),
           py::arg("beta") = py::none(), py::arg("init") = "from_l0", py::arg("eta1") = py::none())
      .def_property_readonly("eta", [](const AcFgmMethod& s) { return s.history().eta; })
      .def_property_readonly("tau", [](const AcFgmMethod& s) { return s.history().tau; })
      .def_property_readonly("local_curvature", [](const AcFgmMethod& s) { return s.history().curvature; })
      .def_property_readonly("hat_curvature", [](const AcFgmMethod& s) { return s.history().hat_curvature; })
      .def("averaged_iterate", [](const AcFgmMethod& s) { return averaged_iterate(s.state()).to_vector(); })
      .def("certificate", [](const AcFgmMethod& s, double distance_sq) {
        const auto c = certificate(s.state(), s.config().policy, distance_sq);
        return py::make_tuple(c.bound_last_iterate, c.bound_avg_iterate);
      }, py::arg("distance_sq"), "(last-iterate bound, averaged-iterate bound); None when unavailable");

  m.def("baseline",
        [](const std::string& method, ProblemPtr problem, const std::vector<double>& x0,
           std::optional<double> lipschitz, std::optional<double> gamma, double epsilon,
           bool accelerate) {
          BaselineConfig config;
          config.method = parse_baseline_kind(method);
          config.lipschitz = lipschitz;
          config.gamma = gamma;
          config.epsilon = epsilon;
          config.accelerate = accelerate;
          return make_baseline(config, std::move(problem), to_vector(x0));
        },
        py::arg("method"), py::arg("problem"), py::arg("x0"), py::arg("lipschitz") = py::none(),
        py::arg("gamma") = py::none(), py::arg("epsilon") = 1e-10, py::arg("accelerate") = true,
        "AdGD, NS-FGM, NS-PGM or NS-AGD");

  m.def("config_hash", [](const std::string& text, const std::vector<std::string>& overrides) {
    std::istringstream in(text);
    return harness::config_hash(harness::parse_config(in, overrides));
  }, py::arg("text"), py::arg("overrides") = std::vector<std::string>{});

  m.def("run_config",
        [](const std::string& text, const std::vector<std::string>& overrides) {
          std::istringstream in(text);
          const auto config = harness::parse_config(in, overrides);
          std::vector<harness::Trace> traces;
          {
            py::gil_scoped_release release;
            traces = harness::run_experiment(config);
          }
          py::list out;
          for (const auto& t : traces) out.append(trace_dict(t));
          return out;
        },
        py::arg("text"), py::arg("overrides") = std::vector<std::string>{},
        "Runs a config given as text; returns one dict of columns per (problem, solver).");
}
