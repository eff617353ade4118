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

#ifndef CONICAL_OPTIMIZER_HPP
#define CONICAL_OPTIMIZER_HPP

#include <cstdint>
#include <vector>

#include "conical/relations.hpp"
#include "conical/states.hpp"
#include "conical/types.hpp"

namespace conical {

// Projective measurement choice on B for each of the d+1 rounds; the
// columns of each unitary are the measured basis.
struct BobStrategy {
  std::vector<Matrix> unitaries;
};

struct OptimizerConfig {
  int restarts = 8;
  int max_iters = 200;  // coordinate sweeps per start
  std::uint64_t seed = 0;
  double convergence_tol = 1e-7;  // bits per sweep
};

// exp(i H), H Hermitian with diagonal params[0..n-1] and the packed
// off-diagonal real/imag pairs row-major; params has n^2 entries.
Matrix parametrize_unitary(const RealVector& params);

// Inverse of parametrize_unitary through the principal matrix logarithm.
RealVector unitary_params(const Matrix& u);

Povm projective_povm(const Matrix& u);

// 1/(d+1) sum_theta H2(X^(theta)|Y^(theta)) under the given strategy.
double witness_objective(const BipartiteState& rho, const MumSet& mums,
                         const BobStrategy& strategy);

struct OptimizeResult {
  BobStrategy strategy;
  RelationReport report;  // lhs = best objective, rhs = witness threshold
};

// Derivative-free minimization of the witness objective, decoupled per
// measurement round: structured starts (conditional-state eigenbasis and,
// when dimensions allow, the transposed-measurement eigenbasis) padded
// with random starts up to cfg.restarts, each refined by coordinate-wise
// golden-section descent. Deterministic in cfg.seed.
OptimizeResult optimize_bob(const BipartiteState& rho, const MumSet& mums,
                            const OptimizerConfig& cfg = {});

}  // namespace conical

#endif
