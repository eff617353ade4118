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

#ifndef CONICAL_RELATIONS_HPP
#define CONICAL_RELATIONS_HPP

#include <map>
#include <string>
#include <vector>

#include "conical/entropy.hpp"
#include "conical/measurements.hpp"
#include "conical/states.hpp"

namespace conical {

enum class RelationKind { equality, inequality };

struct RelationReport {
  std::string name;
  RelationKind kind = RelationKind::equality;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;  // lhs - rhs
  double tolerance = 0.0;
  bool pass = false;
  std::map<std::string, double> context;
};

RelationReport make_report(std::string name, RelationKind kind, double lhs,
                           double rhs, double tolerance,
                           std::map<std::string, double> context = {});

// H2(X|B Theta) of the assembly measured with the complete MUM set equals
// log2(d+1) - log2(f + g 2^(-H2(A|B))).
RelationReport mum_uncertainty_equality(const BipartiteState& rho,
                                        const MumSet& mums,
                                        double tolerance = tol::relation);

// The d+1 pretty-good guessing probabilities sum to f + g 2^(-H2(A|B)).
RelationReport pg_guessing_sum(const BipartiteState& rho, const MumSet& mums,
                               double tolerance = tol::relation);

// Averaged per-measurement entropies dominate the equality value:
// 1/(d+1) sum_theta H2(X^(theta)|B) >= log2(d+1) - log2(f + g 2^(-H2(A|B))),
// tight when the per-measurement entropies coincide (the report fails if
// they coincide but the gap does not close).
RelationReport entropy_sum_bound(const BipartiteState& rho, const MumSet& mums,
                                 double tolerance = 1e-9);

// log2(d+1) - log2(f + g) = log2((d+1)/(1+kappa)); violating it with
// measured classical entropies certifies entanglement.
double witness_threshold(int dim, double kappa);

// lhs = averaged classical conditional collision entropy of the d+1 joint
// outcome distributions. pass means no violation (inconclusive); a report
// with pass == false flags entanglement.
RelationReport mum_witness(const std::vector<JointDistribution>& dists,
                           int dim, double kappa, double tolerance = 1e-9);

// Element-wise transposed measurements; at kappa = 1 this is the conjugate
// basis, the strategy that makes the maximally entangled state violate the
// witness maximally.
std::vector<Povm> transposed_bob_povms(const MumSet& mums);

std::vector<JointDistribution> measured_distributions(
    const BipartiteState& rho, const MumSet& mums,
    const std::vector<Povm>& bob);

RelationReport mum_witness_state(const BipartiteState& rho, const MumSet& mums,
                                 const std::vector<Povm>& bob,
                                 double tolerance = 1e-9);

// H2(X|B) of the SIM-measured assembly equals -log2(l + r 2^(-H2(A|B))).
RelationReport sim_uncertainty_equality(const BipartiteState& rho,
                                        const SimSet& sim,
                                        double tolerance = tol::relation);

// -log2(l + r) = log2(d(d+1)) - log2(1 + d^2 eta).
double sim_witness_threshold(int dim, double eta);

// H2(X|B) below the threshold certifies H2(A|B) < 0, hence entanglement.
RelationReport sim_witness(const BipartiteState& rho, const SimSet& sim,
                           double tolerance = 1e-9);

}  // namespace conical

#endif
