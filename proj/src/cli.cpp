// Copyright 2026 The conical-lab developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "conical/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "conical/bases.hpp"
#include "conical/entropy.hpp"
#include "conical/io.hpp"
#include "conical/linalg.hpp"
#include "conical/measurements.hpp"
#include "conical/optimizer.hpp"
#include "conical/parallel.hpp"
#include "conical/relations.hpp"
#include "conical/states.hpp"

namespace conical {

namespace {

// Raised after a command has already reported its failing checks; mapped to
// exit code 1.
struct CheckFailed {};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a,
                       std::uint64_t b = 0) {
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (a + 1) +
                    0xbf58476d1ce4e5b9ULL * (b + 1);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

struct Manifest {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::uint64_t seed = 0;
  std::vector<RelationReport> reports;
};

Json manifest_to_json(const Manifest& m) {
  Json reports = Json::array();
  for (const RelationReport& r : m.reports) {
    reports.push_back(report_to_json(r));
  }
  return Json{{"command", m.command},
              {"parameters", Json(m.parameters)},
              {"seed", m.seed},
              {"toolVersion", CONICAL_LAB_VERSION},
              {"reports", reports}};
}

void emit_manifest(const Manifest& m, bool as_json) {
  if (as_json) {
    std::cout << manifest_to_json(m).dump(2) << '\n';
    return;
  }
  std::printf("%-32s %16s %16s %12s  %s\n", "check", "lhs", "rhs", "gap",
              "pass");
  int failed = 0;
  for (const RelationReport& r : m.reports) {
    std::printf("%-32s %16.9g %16.9g %12.3e  %s\n", r.name.c_str(), r.lhs,
                r.rhs, r.gap, r.pass ? "ok" : "FAIL");
    failed += r.pass ? 0 : 1;
  }
  if (failed == 0) {
    std::printf("all %zu checks passed\n", m.reports.size());
  } else {
    std::printf("%d of %zu checks FAILED\n", failed, m.reports.size());
  }
}

void finish(const Manifest& m, bool as_json) {
  emit_manifest(m, as_json);
  for (const RelationReport& r : m.reports) {
    if (!r.pass) {
      throw CheckFailed{};
    }
  }
}

void write_artifact(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    save_json(out_path, j);
  }
}

HermitianBasis make_basis(int dim, const std::optional<std::uint64_t>& seed,
                          const std::string& in_path) {
  HermitianBasis basis;
  if (!in_path.empty()) {
    basis = basis_from_json(load_json(in_path));
  } else if (seed) {
    basis = random_rotated_basis(dim, *seed);
  } else {
    basis = gell_mann_basis(dim);
  }
  validate(basis);
  return basis;
}

double parse_t(const std::string& spec, double t_max) {
  if (spec == "max") {
    return t_max;
  }
  try {
    std::size_t used = 0;
    const double t = std::stod(spec, &used);
    if (used != spec.size()) {
      throw std::invalid_argument(spec);
    }
    return t;
  } catch (const std::exception&) {
    throw std::invalid_argument("--t expects a number or \"max\", got \"" +
                                spec + "\"");
  }
}

MumSet load_mum(const std::string& path) {
  MumSet set = mum_from_json(load_json(path));
  const MumReport report = verify_mum(set);
  if (!report.pass()) {
    throw std::invalid_argument(path + ": measurement set deviates by " +
                                std::to_string(report.max_deviation()));
  }
  return set;
}

SimSet load_sim(const std::string& path) {
  SimSet set = sim_from_json(load_json(path));
  const SimReport report = verify_sim(set);
  if (!report.pass()) {
    throw std::invalid_argument(path + ": sim deviates by " +
                                std::to_string(report.max_deviation()));
  }
  return set;
}

BipartiteState load_state(const std::string& path) {
  BipartiteState rho = state_from_json(load_json(path));
  validate_state(rho);
  return rho;
}

MumSet default_mum(int dim) {
  if (dim == 2 || dim == 3 || dim == 5) {
    return mub_set(dim);
  }
  return build_mum_set_max(gell_mann_basis(dim));
}

BipartiteState instance_state(int dim_a, int dim_b, std::uint64_t seed,
                              int index, std::uint64_t stream) {
  const int rank = 1 + index % (dim_a * dim_b);
  return {{dim_a, dim_b},
          random_density(dim_a * dim_b, rank, mix_seed(seed, index, stream))};
}

struct MumInstance {
  MumSet mums;
  BipartiteState rho;
};

// Deterministic randomized instance: bases alternate between the canonical
// and rotated families, t alternates full/half range, state ranks cycle.
MumInstance mum_instance(int dim_a, int dim_b, std::uint64_t seed, int index,
                         const std::string& t_spec) {
  const HermitianBasis basis =
      index % 2 == 0 ? gell_mann_basis(dim_a)
                     : random_rotated_basis(dim_a, mix_seed(seed, index, 1));
  double t = parse_t(t_spec, mum_max_t(basis));
  if (t_spec == "max" && index % 3 == 2) {
    t *= 0.5;
  }
  return {build_mum_set(basis, t),
          instance_state(dim_a, dim_b, seed, index, 2)};
}

struct SimInstance {
  SimSet sim;
  BipartiteState rho;
};

SimInstance sim_instance(int dim_a, int dim_b, std::uint64_t seed, int index,
                         const std::string& t_spec) {
  const HermitianBasis basis =
      index % 2 == 0 ? gell_mann_basis(dim_a)
                     : random_rotated_basis(dim_a, mix_seed(seed, index, 3));
  double t = parse_t(t_spec, sim_max_t(basis));
  if (t_spec == "max" && index % 3 == 2) {
    t *= 0.5;
  }
  return {build_sim_set(basis, t),
          instance_state(dim_a, dim_b, seed, index, 4)};
}

Ensemble random_ensemble(int dim, int members, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  Ensemble ensemble;
  double total = 0.0;
  for (int x = 0; x < members; ++x) {
    ensemble.weights.push_back(expo(rng));
    total += ensemble.weights.back();
    ensemble.states.push_back(
        random_density(dim, 1 + static_cast<int>(rng() % dim), rng()));
  }
  for (double& w : ensemble.weights) {
    w /= total;
  }
  return ensemble;
}

RelationReport suite_report(const std::string& name, double worst,
                            double allowed, int instances) {
  RelationReport report;
  report.name = name;
  report.kind = RelationKind::inequality;
  report.lhs = worst;
  report.rhs = allowed;
  report.gap = allowed - worst;
  report.tolerance = 0.0;
  report.pass = worst <= allowed;
  report.context["instances"] = instances;
  return report;
}

// ---- subcommand option blocks ----

struct BasisGenOpts {
  int dim = 2;
  std::optional<std::uint64_t> seed;
  std::string out;
};

struct CheckOpts {
  std::string in;
  double tol = tol::povm;
  bool json = false;
};

struct MumBuildOpts {
  int dim = 2;
  std::optional<std::uint64_t> seed;
  std::string basis_in;
  std::string t_spec = "max";
  std::optional<double> kappa;
  std::optional<double> eta;
  std::string out;
};

struct EntropyOpts {
  std::string in;
  bool json = false;
};

struct RelationOpts {
  std::string state_in;
  std::string mum_in;
  std::string sim_in;
  int dim_a = 2;
  int dim_b = 2;
  std::string t_spec = "max";
  std::uint64_t seed = 0;
  int trials = 1;
  double tol = tol::relation;
  bool json = false;
};

struct DetectOpts {
  std::string state_in;
  std::string mum_in;
  int dim = 2;
  std::uint64_t seed = 0;
  bool optimize = false;
  int restarts = 8;
  int iters = 200;
  double tol = 1e-9;
  bool json = false;
  std::string expect;
};

struct SelftestOpts {
  std::vector<int> dims = {2, 3};
  int trials = 20;
  std::uint64_t seed = 7;
  double tol = tol::relation;
  bool json = false;
};

// ---- command handlers ----

void run_basis_gen(const BasisGenOpts& o) {
  write_artifact(basis_to_json(make_basis(o.dim, o.seed, "")), o.out);
}

void run_basis_check(const CheckOpts& o) {
  const HermitianBasis basis = basis_from_json(load_json(o.in));
  const int d = basis.dim;
  const int count = static_cast<int>(basis.operators.size());
  if (count != d * d - 1) {
    throw std::invalid_argument(o.in + ": expected " +
                                std::to_string(d * d - 1) + " operators, got " +
                                std::to_string(count));
  }
  for (const Matrix& op : basis.operators) {
    if (op.rows() != d || op.cols() != d) {
      throw std::invalid_argument(o.in + ": operator shape mismatch");
    }
  }
  Manifest m;
  m.command = "basis check";
  double herm_dev = 0.0;
  double trace_dev = 0.0;
  double ortho_dev = 0.0;
  for (int j = 0; j < count; ++j) {
    const Matrix& f = basis.operators[static_cast<std::size_t>(j)];
    herm_dev = std::max(herm_dev, (f - f.adjoint().eval()).norm());
    trace_dev = std::max(trace_dev, std::abs(f.trace()));
    for (int k = 0; k <= j; ++k) {
      const double target = j == k ? 1.0 : 0.0;
      ortho_dev = std::max(
          ortho_dev,
          std::abs(real_trace_product(
                       f, basis.operators[static_cast<std::size_t>(k)]) -
                   target));
    }
  }
  m.reports.push_back(suite_report("basis-hermitian", herm_dev, o.tol, count));
  m.reports.push_back(suite_report("basis-traceless", trace_dev, o.tol,
                                   count));
  m.reports.push_back(
      suite_report("basis-orthonormality", ortho_dev, o.tol, count));
  m.reports.push_back(
      suite_report("basis-design-identity", design_identity_residual(basis),
                   o.tol, 1));
  finish(m, o.json);
}

void run_mum_build(const MumBuildOpts& o) {
  const HermitianBasis basis = make_basis(o.dim, o.seed, o.basis_in);
  const double t = o.kappa ? t_from_kappa(basis.dim, *o.kappa)
                           : parse_t(o.t_spec, mum_max_t(basis));
  write_artifact(mum_to_json(build_mum_set(basis, t)), o.out);
}

void run_mum_verify(const CheckOpts& o) {
  const MumSet set = mum_from_json(load_json(o.in));
  const MumReport r = verify_mum(set);
  Manifest m;
  m.command = "mum verify";
  m.reports.push_back(suite_report("mum-psd", r.psd_defect, o.tol, set.dim));
  m.reports.push_back(
      suite_report("mum-completeness", r.completeness, o.tol, set.dim));
  m.reports.push_back(
      suite_report("mum-unit-trace", r.unit_trace, o.tol, set.dim));
  m.reports.push_back(suite_report("mum-purity", r.purity, o.tol, set.dim));
  m.reports.push_back(
      suite_report("mum-intra-overlap", r.intra_overlap, o.tol, set.dim));
  m.reports.push_back(
      suite_report("mum-cross-overlap", r.cross_overlap, o.tol, set.dim));
  m.reports.push_back(
      suite_report("mum-strength-consistency", r.strength, o.tol, set.dim));
  finish(m, o.json);
}

void run_sim_build(const MumBuildOpts& o) {
  const HermitianBasis basis = make_basis(o.dim, o.seed, o.basis_in);
  const double t = o.eta ? t_from_eta(basis.dim, *o.eta)
                         : parse_t(o.t_spec, sim_max_t(basis));
  write_artifact(sim_to_json(build_sim_set(basis, t)), o.out);
}

void run_sim_verify(const CheckOpts& o) {
  const SimSet set = sim_from_json(load_json(o.in));
  const SimReport r = verify_sim(set);
  Manifest m;
  m.command = "sim verify";
  m.reports.push_back(suite_report("sim-psd", r.psd_defect, o.tol, set.dim));
  m.reports.push_back(
      suite_report("sim-completeness", r.completeness, o.tol, set.dim));
  m.reports.push_back(
      suite_report("sim-outcome-trace", r.outcome_trace, o.tol, set.dim));
  m.reports.push_back(suite_report("sim-purity", r.purity, o.tol, set.dim));
  m.reports.push_back(
      suite_report("sim-pair-overlap", r.pair_overlap, o.tol, set.dim));
  m.reports.push_back(
      suite_report("sim-strength-consistency", r.strength, o.tol, set.dim));
  finish(m, o.json);
}

void run_design_fit(const CheckOpts& o) {
  const Json j = load_json(o.in);
  Manifest m;
  m.command = "design fit";
  DesignFit fit;
  double expected_plus = 0.0;
  double expected_minus = 0.0;
  if (j.contains("povms")) {
    const MumSet set = mum_from_json(j);
    std::vector<Matrix> pooled;
    for (const Povm& povm : set.povms) {
      pooled.insert(pooled.end(), povm.operators.begin(),
                    povm.operators.end());
    }
    fit = conical_design_fit(pooled);
    expected_plus = design_f(set.dim, set.kappa);
    expected_minus = design_g(set.dim, set.kappa);
  } else if (j.contains("eta")) {
    const SimSet set = sim_from_json(j);
    fit = conical_design_fit(set.operators);
    expected_plus = design_l(set.dim, set.eta);
    expected_minus = design_r(set.dim, set.eta);
  } else {
    throw std::invalid_argument(o.in +
                                ": expected a measurement-set artifact");
  }
  m.reports.push_back(make_report("design-k-plus", RelationKind::equality,
                                  fit.k_plus, expected_plus, o.tol));
  m.reports.push_back(make_report("design-k-minus", RelationKind::equality,
                                  fit.k_minus, expected_minus, o.tol));
  m.reports.push_back(suite_report("design-residual", fit.residual, o.tol, 1));
  finish(m, o.json);
}

void run_mub_gen(const BasisGenOpts& o) {
  write_artifact(mum_to_json(mub_set(o.dim)), o.out);
}

void run_entropy_h2(const EntropyOpts& o) {
  const BipartiteState rho = load_state(o.in);
  const double h2 = h2_conditional(rho);
  if (o.json) {
    std::cout << Json{{"h2", h2}, {"dA", rho.split.dim_a},
                      {"dB", rho.split.dim_b}}
                     .dump(2)
              << '\n';
  } else {
    std::printf("H2(A|B) = %.17g bits\n", h2);
  }
}

void run_entropy_classical(const EntropyOpts& o) {
  const JointDistribution dist = distribution_from_json(load_json(o.in));
  validate_distribution(dist);
  const double h2 = h2_classical_conditional(dist);
  if (o.json) {
    std::cout << Json{{"h2", h2}}.dump(2) << '\n';
  } else {
    std::printf("H2(X|Y) = %.17g bits\n", h2);
  }
}

void run_relation(const std::string& which, const RelationOpts& o) {
  Manifest m;
  m.command = "relation " + which;
  m.seed = o.seed;
  m.parameters = {{"trials", std::to_string(o.trials)},
                  {"t", o.t_spec},
                  {"dim", std::to_string(o.dim_a)},
                  {"db", std::to_string(o.dim_b)}};
  const bool is_sim = which == "theorem2";

  if (!o.state_in.empty()) {
    const BipartiteState rho = load_state(o.state_in);
    if (is_sim) {
      const SimSet sim = o.sim_in.empty()
                             ? build_sim_set_max(gell_mann_basis(rho.split.dim_a))
                             : load_sim(o.sim_in);
      m.reports.push_back(sim_uncertainty_equality(rho, sim, o.tol));
    } else {
      const MumSet mums =
          o.mum_in.empty() ? default_mum(rho.split.dim_a) : load_mum(o.mum_in);
      if (which == "theorem1") {
        m.reports.push_back(mum_uncertainty_equality(rho, mums, o.tol));
      } else if (which == "lemma1") {
        m.reports.push_back(pg_guessing_sum(rho, mums, o.tol));
      } else {
        m.reports.push_back(entropy_sum_bound(rho, mums, o.tol));
      }
    }
    finish(m, o.json);
    return;
  }

  // no state file: deterministic random instances; a provided measurement
  // artifact is held fixed across trials and only the state varies
  std::optional<MumSet> fixed_mums;
  std::optional<SimSet> fixed_sim;
  int dim_a = o.dim_a;
  if (is_sim && !o.sim_in.empty()) {
    fixed_sim = load_sim(o.sim_in);
    dim_a = fixed_sim->dim;
  } else if (!is_sim && !o.mum_in.empty()) {
    fixed_mums = load_mum(o.mum_in);
    dim_a = fixed_mums->dim;
  }
  m.parameters["dim"] = std::to_string(dim_a);

  std::vector<RelationReport> reports(static_cast<std::size_t>(o.trials));
  parallel_for(o.trials, [&](int i) {
    if (is_sim) {
      const SimInstance inst =
          fixed_sim ? SimInstance{*fixed_sim, instance_state(dim_a, o.dim_b,
                                                             o.seed, i, 4)}
                    : sim_instance(dim_a, o.dim_b, o.seed, i, o.t_spec);
      reports[static_cast<std::size_t>(i)] =
          sim_uncertainty_equality(inst.rho, inst.sim, o.tol);
    } else {
      const MumInstance inst =
          fixed_mums ? MumInstance{*fixed_mums, instance_state(dim_a, o.dim_b,
                                                               o.seed, i, 2)}
                     : mum_instance(dim_a, o.dim_b, o.seed, i, o.t_spec);
      if (which == "theorem1") {
        reports[static_cast<std::size_t>(i)] =
            mum_uncertainty_equality(inst.rho, inst.mums, o.tol);
      } else if (which == "lemma1") {
        reports[static_cast<std::size_t>(i)] =
            pg_guessing_sum(inst.rho, inst.mums, o.tol);
      } else {
        reports[static_cast<std::size_t>(i)] =
            entropy_sum_bound(inst.rho, inst.mums, o.tol);
      }
    }
    reports[static_cast<std::size_t>(i)].context["instance"] = i;
  });
  m.reports = std::move(reports);
  finish(m, o.json);
}

void run_detect(const DetectOpts& o) {
  const BipartiteState rho =
      o.state_in.empty() ? max_entangled(o.dim) : load_state(o.state_in);
  const MumSet mums =
      o.mum_in.empty() ? default_mum(rho.split.dim_a) : load_mum(o.mum_in);
  if (mums.dim != rho.split.dim_a) {
    throw std::invalid_argument("detect: measurement does not match state");
  }

  Manifest m;
  m.command = "detect";
  m.seed = o.seed;
  const bool transposable = rho.split.dim_b == mums.dim;
  if (transposable) {
    m.reports.push_back(
        mum_witness_state(rho, mums, transposed_bob_povms(mums), o.tol));
  }
  if (o.optimize) {
    OptimizerConfig cfg;
    cfg.restarts = o.restarts;
    cfg.max_iters = o.iters;
    cfg.seed = o.seed;
    m.reports.push_back(optimize_bob(rho, mums, cfg).report);
  }
  if (m.reports.empty()) {
    throw std::invalid_argument(
        "detect: dB != d leaves no default strategy; pass --optimize");
  }

  bool entangled = false;
  for (const RelationReport& r : m.reports) {
    entangled = entangled || !r.pass;
  }
  emit_manifest(m, o.json);
  if (!o.json) {
    std::printf("threshold = %.12g bits\n", m.reports.front().rhs);
    std::printf("verdict: %s\n", entangled ? "entangled" : "inconclusive");
  }
  if (!o.expect.empty()) {
    const bool expect_entangled = o.expect == "entangled";
    if (expect_entangled != entangled) {
      throw CheckFailed{};
    }
  }
}

void run_selftest(const SelftestOpts& o) {
  Manifest m;
  m.command = "selftest";
  m.seed = o.seed;
  m.parameters = {{"trials", std::to_string(o.trials)}};
  const int trials = std::max(1, o.trials);
  std::vector<int> dims = o.dims;
  if (dims.empty()) {
    dims = {2, 3};
  }

  {  // operator-basis identity across random rotations
    double worst = 0.0;
    int count = 0;
    for (int d : dims) {
      worst = std::max(worst, design_identity_residual(gell_mann_basis(d)));
      for (int s = 0; s < trials; ++s, ++count) {
        worst = std::max(worst, design_identity_residual(random_rotated_basis(
                                    d, mix_seed(o.seed, s, d))));
      }
    }
    m.reports.push_back(suite_report("basis-identity", worst, 1e-9, count));
  }

  {  // defining conditions and design fit of constructed measurement sets
    double worst_cond = 0.0;
    double worst_fit = 0.0;
    int count = 0;
    for (int d : dims) {
      std::vector<HermitianBasis> bases = {gell_mann_basis(d)};
      bases.push_back(random_rotated_basis(d, mix_seed(o.seed, 11, d)));
      bases.push_back(random_rotated_basis(d, mix_seed(o.seed, 12, d)));
      for (const HermitianBasis& basis : bases) {
        const double t_max = mum_max_t(basis);
        for (double t : {t_max, t_max / 2}) {
          const MumSet set = build_mum_set(basis, t);
          worst_cond = std::max(worst_cond, verify_mum(set).max_deviation());
          std::vector<Matrix> pooled;
          for (const Povm& povm : set.povms) {
            pooled.insert(pooled.end(), povm.operators.begin(),
                          povm.operators.end());
          }
          const DesignFit fit = conical_design_fit(pooled);
          worst_fit = std::max(
              {worst_fit, std::abs(fit.k_plus - design_f(d, set.kappa)),
               std::abs(fit.k_minus - design_g(d, set.kappa)), fit.residual});
          ++count;
        }
      }
      if (d == 2 || d == 3 || d == 5) {
        const MumSet mub = mub_set(d);
        worst_cond = std::max(worst_cond, verify_mum(mub).max_deviation());
        std::vector<Matrix> pooled;
        for (const Povm& povm : mub.povms) {
          pooled.insert(pooled.end(), povm.operators.begin(),
                        povm.operators.end());
        }
        const DesignFit fit = conical_design_fit(pooled);
        worst_fit = std::max({worst_fit, std::abs(fit.k_plus - 1.0),
                              std::abs(fit.k_minus - 1.0), fit.residual});
        ++count;
      }
    }
    m.reports.push_back(suite_report("mum-conditions", worst_cond, 1e-9,
                                     count));
    m.reports.push_back(suite_report("mum-design-fit", worst_fit, 1e-9,
                                     count));
  }

  {  // sim conditions and design fit
    double worst_cond = 0.0;
    double worst_fit = 0.0;
    int count = 0;
    for (int d : dims) {
      for (const HermitianBasis& basis :
           {gell_mann_basis(d), random_rotated_basis(d, mix_seed(o.seed, 13, d))}) {
        const double t_max = sim_max_t(basis);
        for (double t : {t_max, t_max / 2}) {
          const SimSet set = build_sim_set(basis, t);
          worst_cond = std::max(worst_cond, verify_sim(set).max_deviation());
          const DesignFit fit = conical_design_fit(set.operators);
          worst_fit = std::max(
              {worst_fit, std::abs(fit.k_plus - design_l(d, set.eta)),
               std::abs(fit.k_minus - design_r(d, set.eta)), fit.residual});
          ++count;
        }
      }
    }
    m.reports.push_back(suite_report("sim-conditions", worst_cond, 1e-9,
                                     count));
    m.reports.push_back(suite_report("sim-design-fit", worst_fit, 1e-9,
                                     count));
  }

  // randomized relation grids over all dimension pairs
  struct Pair {
    int a;
    int b;
  };
  std::vector<Pair> pairs;
  for (int a : dims) {
    for (int b : dims) {
      if (a >= 2 && a * b <= 25) {
        pairs.push_back({a, b});
      }
    }
  }

  {
    const int total = static_cast<int>(pairs.size()) * trials;
    std::vector<double> eq_gap(static_cast<std::size_t>(total));
    std::vector<double> closed_gap(static_cast<std::size_t>(total));
    std::vector<double> marginal_dev(static_cast<std::size_t>(total));
    std::vector<double> guess_gap(static_cast<std::size_t>(total));
    std::vector<double> bound_margin(static_cast<std::size_t>(total));
    parallel_for(total, [&](int i) {
      const Pair pair = pairs[static_cast<std::size_t>(i) / trials];
      const int k = i % trials;
      const MumInstance inst =
          mum_instance(pair.a, pair.b, mix_seed(o.seed, 21, pair.a * 7 + pair.b),
                       k, "max");
      const std::size_t idx = static_cast<std::size_t>(i);
      eq_gap[idx] =
          std::abs(mum_uncertainty_equality(inst.rho, inst.mums, o.tol).gap);
      const CqAssembly cq = measure_cq_full(inst.rho, inst.mums);
      closed_gap[idx] =
          std::abs(h2_cq_closed_form(inst.rho, inst.mums) -
                   h2_conditional(cq.flatten()));
      const BipartiteState flat = cq.flatten();
      const Matrix cond_marginal = partial_trace(flat.matrix, flat.split,
                                                 Subsystem::B);
      marginal_dev[idx] = frobenius_distance(
          cond_marginal,
          kron(marginal(inst.rho, Subsystem::B),
               Matrix::Identity(inst.mums.dim + 1, inst.mums.dim + 1) /
                   (inst.mums.dim + 1.0)));
      guess_gap[idx] =
          std::abs(pg_guessing_sum(inst.rho, inst.mums, o.tol).gap);
      bound_margin[idx] = entropy_sum_bound(inst.rho, inst.mums).gap;
    });
    const auto max_of = [](const std::vector<double>& v) {
      return *std::max_element(v.begin(), v.end());
    };
    const auto min_of = [](const std::vector<double>& v) {
      return *std::min_element(v.begin(), v.end());
    };
    m.reports.push_back(suite_report("mum-uncertainty-equality",
                                     max_of(eq_gap), o.tol, total));
    m.reports.push_back(
        suite_report("closed-form-match", max_of(closed_gap), 1e-9, total));
    m.reports.push_back(suite_report("conditioning-marginal",
                                     max_of(marginal_dev), 1e-10, total));
    m.reports.push_back(
        suite_report("pg-guessing-sum", max_of(guess_gap), o.tol, total));
    m.reports.push_back(suite_report("entropy-sum-bound",
                                     -min_of(bound_margin), 1e-9, total));
  }

  {  // entropy-sum bound without memory (dB = 1)
    double worst = 0.0;
    for (int d : dims) {
      for (int k = 0; k < trials; ++k) {
        const MumInstance inst =
            mum_instance(d, 1, mix_seed(o.seed, 22, d), k, "max");
        const RelationReport r = entropy_sum_bound(inst.rho, inst.mums);
        worst = std::max(worst, -r.gap);
        const double f = design_f(d, inst.mums.kappa);
        const double g = design_g(d, inst.mums.kappa);
        const double purity =
            real_trace_product(inst.rho.matrix, inst.rho.matrix);
        const double stated =
            std::log2(d + 1.0) - std::log2(f + g * purity);
        worst = std::max(worst, std::abs(r.rhs - stated));
      }
    }
    m.reports.push_back(suite_report("entropy-sum-no-memory", worst, o.tol,
                                     static_cast<int>(dims.size()) * trials));
  }

  {  // sim equality grid
    const int total = static_cast<int>(pairs.size()) * trials;
    std::vector<double> gaps(static_cast<std::size_t>(total));
    parallel_for(total, [&](int i) {
      const Pair pair = pairs[static_cast<std::size_t>(i) / trials];
      const int k = i % trials;
      const SimInstance inst = sim_instance(
          pair.a, pair.b, mix_seed(o.seed, 23, pair.a * 7 + pair.b), k, "max");
      gaps[static_cast<std::size_t>(i)] =
          std::abs(sim_uncertainty_equality(inst.rho, inst.sim, o.tol).gap);
    });
    m.reports.push_back(suite_report(
        "sim-uncertainty-equality",
        *std::max_element(gaps.begin(), gaps.end()), o.tol, total));
  }

  {  // pretty-good identity on random ensembles
    double worst = 0.0;
    for (int d : dims) {
      for (int k = 0; k < trials; ++k) {
        const Ensemble ensemble =
            random_ensemble(d, 2 + k % 3, mix_seed(o.seed, 24, d * 31 + k));
        const double born = pg_guess_probability(ensemble);
        const double via_h2 =
            std::exp2(-h2_conditional(cq_embed(ensemble)));
        worst = std::max(worst, std::abs(born - via_h2));
      }
    }
    m.reports.push_back(suite_report("pg-identity", worst, 1e-9,
                                     static_cast<int>(dims.size()) * trials));
  }

  {  // witness: no false positives on separable states, detection on the
     // maximally entangled fixture
    double worst_margin = 0.0;
    int count = 0;
    for (int d : dims) {
      if (d != 2 && d != 3 && d != 5) {
        continue;
      }
      const MumSet mums = mub_set(d);
      const std::vector<Povm> bob = transposed_bob_povms(mums);
      std::vector<double> margins(static_cast<std::size_t>(trials));
      parallel_for(trials, [&](int k) {
        const BipartiteState rho =
            separable_sample({d, d}, mix_seed(o.seed, 25, d * 131 + k));
        margins[static_cast<std::size_t>(k)] =
            mum_witness_state(rho, mums, bob).gap;
      });
      worst_margin = std::max(
          worst_margin, -*std::min_element(margins.begin(), margins.end()));
      count += trials;
    }
    m.reports.push_back(
        suite_report("witness-no-false-positive", worst_margin, 1e-9, count));

    double worst_lhs = 0.0;
    int detected = 0;
    int expected = 0;
    for (int d : dims) {
      if (d != 2 && d != 3 && d != 5) {
        continue;
      }
      const MumSet mums = mub_set(d);
      const RelationReport r = mum_witness_state(
          max_entangled(d), mums, transposed_bob_povms(mums));
      worst_lhs = std::max(worst_lhs, r.lhs);
      detected += r.pass ? 0 : 1;
      ++expected;
    }
    RelationReport bell =
        suite_report("witness-detects-entangled", worst_lhs, 1e-6, expected);
    bell.pass = bell.pass && detected == expected;
    m.reports.push_back(bell);
  }

  finish(m, o.json);
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"mutually unbiased and symmetric measurement toolkit with "
               "collision-entropy uncertainty and entanglement checks"};
  app.set_version_flag("--version", CONICAL_LAB_VERSION);
  app.require_subcommand(1);

  // basis
  auto* basis = app.add_subcommand("basis", "operator-basis commands");
  basis->require_subcommand(1);
  BasisGenOpts basis_gen;
  auto* bg = basis->add_subcommand("gen", "generate an orthonormal basis");
  bg->add_option("--dim", basis_gen.dim, "dimension")->required();
  bg->add_option("--seed", basis_gen.seed,
                 "random rotation seed (canonical basis when omitted)");
  bg->add_option("--out", basis_gen.out, "output file (stdout when omitted)");
  bg->callback([&] { run_basis_gen(basis_gen); });

  CheckOpts basis_check;
  auto* bc = basis->add_subcommand("check", "validate a basis artifact");
  bc->add_option("--in", basis_check.in, "basis JSON")->required();
  bc->add_option("--tol", basis_check.tol, "tolerance");
  bc->add_flag("--json", basis_check.json, "emit the full JSON manifest");
  bc->callback([&] { run_basis_check(basis_check); });

  // mum
  auto* mum = app.add_subcommand("mum", "mutually unbiased measurement sets");
  mum->require_subcommand(1);
  MumBuildOpts mum_build;
  auto* mb = mum->add_subcommand("build", "construct a complete set");
  mb->add_option("--dim", mum_build.dim, "dimension");
  mb->add_option("--seed", mum_build.seed, "basis rotation seed");
  mb->add_option("--in", mum_build.basis_in, "basis JSON to build from");
  auto* mb_t = mb->add_option("--t", mum_build.t_spec,
                              "strength parameter or \"max\"");
  mb->add_option("--kappa", mum_build.kappa, "efficiency target (sets t)")
      ->excludes(mb_t);
  mb->add_option("--out", mum_build.out, "output file");
  mb->callback([&] { run_mum_build(mum_build); });

  CheckOpts mum_verify_o;
  auto* mv = mum->add_subcommand("verify", "check the defining conditions");
  mv->add_option("--in", mum_verify_o.in, "measurement-set JSON")->required();
  mv->add_option("--tol", mum_verify_o.tol, "tolerance");
  mv->add_flag("--json", mum_verify_o.json, "emit the full JSON manifest");
  mv->callback([&] { run_mum_verify(mum_verify_o); });

  // sim
  auto* sim = app.add_subcommand("sim", "symmetric informationally complete "
                                        "measurements");
  sim->require_subcommand(1);
  MumBuildOpts sim_build;
  auto* sb = sim->add_subcommand("build", "construct a SIM");
  sb->add_option("--dim", sim_build.dim, "dimension");
  sb->add_option("--seed", sim_build.seed, "basis rotation seed");
  sb->add_option("--in", sim_build.basis_in, "basis JSON to build from");
  auto* sb_t = sb->add_option("--t", sim_build.t_spec,
                              "strength parameter or \"max\"");
  sb->add_option("--eta", sim_build.eta, "purity target (sets t)")
      ->excludes(sb_t);
  sb->add_option("--out", sim_build.out, "output file");
  sb->callback([&] { run_sim_build(sim_build); });

  CheckOpts sim_verify_o;
  auto* sv = sim->add_subcommand("verify", "check the defining conditions");
  sv->add_option("--in", sim_verify_o.in, "sim JSON")->required();
  sv->add_option("--tol", sim_verify_o.tol, "tolerance");
  sv->add_flag("--json", sim_verify_o.json, "emit the full JSON manifest");
  sv->callback([&] { run_sim_verify(sim_verify_o); });

  // design
  auto* design = app.add_subcommand("design", "conical 2-design tools");
  design->require_subcommand(1);
  CheckOpts design_fit;
  auto* df = design->add_subcommand("fit", "fit sum P (x) P onto {1, swap}");
  df->add_option("--in", design_fit.in, "measurement-set JSON")->required();
  df->add_option("--tol", design_fit.tol, "tolerance");
  df->add_flag("--json", design_fit.json, "emit the full JSON manifest");
  df->callback([&] { run_design_fit(design_fit); });

  // mub
  auto* mub = app.add_subcommand("mub", "exact mutually unbiased bases");
  mub->require_subcommand(1);
  BasisGenOpts mub_gen;
  auto* mg = mub->add_subcommand("gen", "complete MUB set (d = 2, 3, 5)");
  mg->add_option("--dim", mub_gen.dim, "dimension")->required();
  mg->add_option("--out", mub_gen.out, "output file");
  mg->callback([&] { run_mub_gen(mub_gen); });

  // entropy
  auto* entropy = app.add_subcommand("entropy", "collision entropies");
  entropy->require_subcommand(1);
  EntropyOpts entropy_h2;
  auto* eh = entropy->add_subcommand("h2", "conditional collision entropy of "
                                           "a bipartite state");
  eh->add_option("--state,--in", entropy_h2.in, "state JSON")->required();
  eh->add_flag("--json", entropy_h2.json, "emit JSON");
  eh->callback([&] { run_entropy_h2(entropy_h2); });

  EntropyOpts entropy_classical;
  auto* ec = entropy->add_subcommand(
      "classical", "conditional collision entropy of a distribution");
  ec->add_option("--in", entropy_classical.in, "distribution JSON")
      ->required();
  ec->add_flag("--json", entropy_classical.json, "emit JSON");
  ec->callback([&] { run_entropy_classical(entropy_classical); });

  // relation
  auto* relation = app.add_subcommand("relation", "equality and bound checks");
  relation->require_subcommand(1);
  std::map<std::string, RelationOpts> relation_opts;
  for (const std::string which :
       {"theorem1", "lemma1", "lemma2", "theorem2"}) {
    RelationOpts& opts = relation_opts[which];
    auto* cmd = relation->add_subcommand(
        which, which == "theorem1"   ? "uncertainty equality for MUM sets"
               : which == "lemma1"   ? "pretty-good guessing sum"
               : which == "lemma2"   ? "averaged entropy-sum bound"
                                     : "uncertainty equality for SIMs");
    cmd->add_option("--state", opts.state_in, "state JSON (random when "
                                              "omitted)");
    if (which == "theorem2") {
      cmd->add_option("--sim", opts.sim_in, "sim JSON");
    } else {
      cmd->add_option("--mum", opts.mum_in, "measurement-set JSON");
    }
    cmd->add_option("--dim", opts.dim_a, "system A dimension");
    cmd->add_option("--db", opts.dim_b, "system B dimension");
    cmd->add_option("--t", opts.t_spec, "strength parameter or \"max\"");
    cmd->add_option("--seed", opts.seed, "instance seed");
    cmd->add_option("--trials", opts.trials, "number of random instances");
    cmd->add_option("--tol", opts.tol, "tolerance in bits");
    cmd->add_flag("--json", opts.json, "emit the full JSON manifest");
    cmd->callback([&, which] { run_relation(which, relation_opts[which]); });
  }

  // detect
  DetectOpts detect;
  auto* dt = app.add_subcommand("detect", "entanglement witness from measured "
                                          "statistics");
  dt->add_option("--state", detect.state_in,
                 "state JSON (maximally entangled fixture when omitted)");
  dt->add_option("--mum", detect.mum_in, "measurement-set JSON");
  dt->add_option("--dim", detect.dim, "fixture dimension");
  dt->add_option("--seed", detect.seed, "optimizer seed");
  dt->add_flag("--optimize", detect.optimize, "optimize over measurement "
                                              "choices on B");
  dt->add_option("--restarts", detect.restarts, "optimizer restarts");
  dt->add_option("--iters", detect.iters, "optimizer sweep budget");
  dt->add_option("--tol", detect.tol, "violation tolerance in bits");
  dt->add_flag("--json", detect.json, "emit the full JSON manifest");
  dt->add_option("--expect", detect.expect,
                 "fail unless the verdict matches (entangled|inconclusive)")
      ->check(CLI::IsMember({"entangled", "inconclusive"}));
  dt->callback([&] { run_detect(detect); });

  // selftest
  SelftestOpts selftest;
  auto* st = app.add_subcommand("selftest", "run the full property suite");
  st->add_option("--dims", selftest.dims, "dimensions to exercise")
      ->delimiter(',');
  st->add_option("--trials", selftest.trials, "instances per suite");
  st->add_option("--seed", selftest.seed, "master seed");
  st->add_option("--tol", selftest.tol, "equality tolerance in bits");
  st->add_flag("--json", selftest.json, "emit the full JSON manifest");
  st->callback([&] { run_selftest(selftest); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const CheckFailed&) {
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace conical
