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

#include "conical/relations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "conical/linalg.hpp"

namespace conical {

RelationReport make_report(std::string name, RelationKind kind, double lhs,
                           double rhs, double tolerance,
                           std::map<std::string, double> context) {
  RelationReport report;
  report.name = std::move(name);
  report.kind = kind;
  report.lhs = lhs;
  report.rhs = rhs;
  report.gap = lhs - rhs;
  report.tolerance = tolerance;
  report.pass = kind == RelationKind::equality
                    ? std::abs(report.gap) <= tolerance
                    : report.gap >= -tolerance;
  report.context = std::move(context);
  return report;
}

namespace {

double memory_rhs(const BipartiteState& rho, const MumSet& mums) {
  const double fidelity = pg_entanglement_fidelity(rho);
  const double f = design_f(mums.dim, mums.kappa);
  const double g = design_g(mums.dim, mums.kappa);
  return std::log2(mums.dim + 1.0) - std::log2(f + g * fidelity);
}

std::map<std::string, double> mum_context(const BipartiteState& rho,
                                          const MumSet& mums) {
  return {{"dA", static_cast<double>(rho.split.dim_a)},
          {"dB", static_cast<double>(rho.split.dim_b)},
          {"kappa", mums.kappa},
          {"t", mums.t}};
}

}  // namespace

RelationReport mum_uncertainty_equality(const BipartiteState& rho,
                                        const MumSet& mums, double tolerance) {
  const double lhs = h2_conditional(measure_cq_full(rho, mums).flatten());
  return make_report("mum-uncertainty-equality", RelationKind::equality, lhs,
                     memory_rhs(rho, mums), tolerance, mum_context(rho, mums));
}

RelationReport pg_guessing_sum(const BipartiteState& rho, const MumSet& mums,
                               double tolerance) {
  if (mums.dim != rho.split.dim_a) {
    throw std::invalid_argument(
        "pg_guessing_sum: measurement dim does not match system A");
  }
  const int db = rho.split.dim_b;
  const Matrix fallback = Matrix::Identity(db, db) / static_cast<double>(db);
  double lhs = 0.0;
  for (const Povm& povm : mums.povms) {
    const CqAssembly cq = measure_cq_per_theta(rho, povm);
    Ensemble ensemble;
    for (const Matrix& block : cq.blocks) {
      const double weight = std::max(0.0, block.trace().real());
      ensemble.weights.push_back(weight);
      ensemble.states.push_back(weight > 1e-14 ? Matrix(block / weight)
                                               : fallback);
    }
    lhs += pg_guess_probability(ensemble);
  }
  const double f = design_f(mums.dim, mums.kappa);
  const double g = design_g(mums.dim, mums.kappa);
  const double rhs = f + g * pg_entanglement_fidelity(rho);
  return make_report("pg-guessing-sum", RelationKind::equality, lhs, rhs,
                     tolerance, mum_context(rho, mums));
}

RelationReport entropy_sum_bound(const BipartiteState& rho, const MumSet& mums,
                                 double tolerance) {
  if (mums.dim != rho.split.dim_a) {
    throw std::invalid_argument(
        "entropy_sum_bound: measurement dim does not match system A");
  }
  double sum = 0.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const Povm& povm : mums.povms) {
    const double h = h2_conditional(measure_cq_per_theta(rho, povm).flatten());
    sum += h;
    lo = std::min(lo, h);
    hi = std::max(hi, h);
  }
  const double lhs = sum / (mums.dim + 1.0);
  RelationReport report =
      make_report("entropy-sum-bound", RelationKind::inequality, lhs,
                  memory_rhs(rho, mums), tolerance, mum_context(rho, mums));
  report.context["theta_spread"] = hi - lo;
  if (hi - lo <= 1e-9 && std::abs(report.gap) > 1e-8) {
    report.pass = false;
  }
  return report;
}

double witness_threshold(int dim, double kappa) {
  if (dim < 2 || kappa <= 1.0 / dim || kappa > 1.0 + 1e-12) {
    throw std::invalid_argument("witness_threshold: kappa outside (1/d, 1]");
  }
  return std::log2(dim + 1.0) - std::log2(1.0 + kappa);
}

RelationReport mum_witness(const std::vector<JointDistribution>& dists,
                           int dim, double kappa, double tolerance) {
  if (dists.size() != static_cast<std::size_t>(dim) + 1) {
    throw std::invalid_argument("mum_witness: expected d+1 distributions");
  }
  double sum = 0.0;
  for (const JointDistribution& dist : dists) {
    if (dist.dim_x() != dim) {
      throw std::invalid_argument("mum_witness: outcome count mismatch");
    }
    sum += h2_classical_conditional(dist);
  }
  const double lhs = sum / (dim + 1.0);
  return make_report("mum-witness", RelationKind::inequality, lhs,
                     witness_threshold(dim, kappa), tolerance,
                     {{"d", static_cast<double>(dim)}, {"kappa", kappa}});
}

std::vector<Povm> transposed_bob_povms(const MumSet& mums) {
  std::vector<Povm> bob;
  bob.reserve(mums.povms.size());
  for (const Povm& povm : mums.povms) {
    Povm q;
    q.dim = povm.dim;
    q.operators.reserve(povm.operators.size());
    for (const Matrix& p : povm.operators) {
      q.operators.push_back(p.transpose());
    }
    bob.push_back(std::move(q));
  }
  return bob;
}

std::vector<JointDistribution> measured_distributions(
    const BipartiteState& rho, const MumSet& mums,
    const std::vector<Povm>& bob) {
  if (bob.size() != mums.povms.size()) {
    throw std::invalid_argument(
        "measured_distributions: expected one measurement per theta");
  }
  std::vector<JointDistribution> dists;
  dists.reserve(bob.size());
  for (std::size_t theta = 0; theta < bob.size(); ++theta) {
    dists.push_back(joint_distribution(rho, mums.povms[theta], bob[theta]));
  }
  return dists;
}

RelationReport mum_witness_state(const BipartiteState& rho, const MumSet& mums,
                                 const std::vector<Povm>& bob,
                                 double tolerance) {
  RelationReport report =
      mum_witness(measured_distributions(rho, mums, bob), mums.dim, mums.kappa,
                  tolerance);
  report.context["dB"] = static_cast<double>(rho.split.dim_b);
  return report;
}

RelationReport sim_uncertainty_equality(const BipartiteState& rho,
                                        const SimSet& sim, double tolerance) {
  const double lhs = h2_conditional(measure_sim_cq(rho, sim).flatten());
  const double l = design_l(sim.dim, sim.eta);
  const double r = design_r(sim.dim, sim.eta);
  const double rhs = -std::log2(l + r * pg_entanglement_fidelity(rho));
  return make_report("sim-uncertainty-equality", RelationKind::equality, lhs,
                     rhs, tolerance,
                     {{"dA", static_cast<double>(rho.split.dim_a)},
                      {"dB", static_cast<double>(rho.split.dim_b)},
                      {"eta", sim.eta},
                      {"t", sim.t}});
}

double sim_witness_threshold(int dim, double eta) {
  return -std::log2(design_l(dim, eta) + design_r(dim, eta));
}

RelationReport sim_witness(const BipartiteState& rho, const SimSet& sim,
                           double tolerance) {
  const double lhs = h2_conditional(measure_sim_cq(rho, sim).flatten());
  return make_report("sim-witness", RelationKind::inequality, lhs,
                     sim_witness_threshold(sim.dim, sim.eta), tolerance,
                     {{"d", static_cast<double>(sim.dim)}, {"eta", sim.eta}});
}

}  // namespace conical
