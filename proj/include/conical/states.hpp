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

#ifndef CONICAL_STATES_HPP
#define CONICAL_STATES_HPP

#include <cstdint>
#include <vector>

#include "conical/linalg.hpp"
#include "conical/measurements.hpp"
#include "conical/types.hpp"

namespace conical {

struct BipartiteState {
  DimSplit split;
  Matrix matrix;
};

// Throws std::invalid_argument unless PSD with unit trace within tolerance.
void validate_state(const BipartiteState& rho, double tolerance = tol::state);

Matrix marginal(const BipartiteState& rho, Subsystem keep);

// Ginibre-induced random density operator of the given rank: GG^dag
// normalized, G an n x rank matrix of complex standard Gaussians.
Matrix random_density(int dim, int rank, std::uint64_t seed);

BipartiteState max_entangled(int dim);

// Convex mixture of `terms` product states with flat Dirichlet weights;
// separable by construction.
BipartiteState separable_sample(const DimSplit& split, int terms,
                                std::uint64_t seed);
BipartiteState separable_sample(const DimSplit& split, std::uint64_t seed);

enum class CqKind { per_theta, full, sim };

// Classical-quantum state produced by measuring the A side: one
// unnormalized conditional operator on B per classical label. Labels are
// (x, theta) pairs for kind full, plain outcomes otherwise; any uniform
// 1/(d+1) weight over theta is already folded into the blocks.
struct CqAssembly {
  CqKind kind = CqKind::per_theta;
  int dim_x = 0;
  int dim_theta = 1;
  int dim_b = 0;
  std::vector<Matrix> blocks;  // index x * dim_theta + theta

  const Matrix& block(int x, int theta = 0) const {
    return blocks.at(static_cast<std::size_t>(x) * dim_theta + theta);
  }

  // Block-diagonal density operator on X (x) (B (x) Theta), basis ordered
  // |x> |b> |theta>. The split groups the conditioning registers together.
  BipartiteState flatten() const;
};

CqAssembly measure_cq_per_theta(const BipartiteState& rho, const Povm& povm);

// Uniformly weighted assembly over all d+1 measurements of the set; the
// marginal of flatten() on the conditioning registers is rho_B (x) 1/(d+1).
CqAssembly measure_cq_full(const BipartiteState& rho, const MumSet& mums);

CqAssembly measure_sim_cq(const BipartiteState& rho, const SimSet& sim);

struct JointDistribution {
  RealMatrix p;  // rows x, cols y

  int dim_x() const { return static_cast<int>(p.rows()); }
  int dim_y() const { return static_cast<int>(p.cols()); }
};

void validate_distribution(const JointDistribution& dist,
                           double tolerance = tol::povm);

// p(x, y) = tr[(P_x (x) Q_y) rho].
JointDistribution joint_distribution(const BipartiteState& rho,
                                     const Povm& alice, const Povm& bob);

}  // namespace conical

#endif
