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

#include "conical/states.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace conical {

void validate_state(const BipartiteState& rho, double tolerance) {
  const int n = rho.split.total();
  if (rho.split.dim_a < 1 || rho.split.dim_b < 1) {
    throw std::invalid_argument("state: dimensions must be positive");
  }
  if (rho.matrix.rows() != n || rho.matrix.cols() != n) {
    throw std::invalid_argument("state: matrix does not match the split");
  }
  if (!is_hermitian(rho.matrix, tolerance)) {
    throw std::invalid_argument("state: matrix is not Hermitian");
  }
  const EigenSystem es = herm_eig(rho.matrix, tolerance);
  const double lam_min = es.values(es.values.size() - 1);
  if (lam_min < -tolerance) {
    throw std::invalid_argument("state: negative eigenvalue " +
                                std::to_string(lam_min));
  }
  if (std::abs(rho.matrix.trace() - Complex(1.0)) > tolerance) {
    throw std::invalid_argument("state: trace differs from one");
  }
}

Matrix marginal(const BipartiteState& rho, Subsystem keep) {
  return partial_trace(rho.matrix, rho.split, keep);
}

Matrix random_density(int dim, int rank, std::uint64_t seed) {
  if (dim < 1 || rank < 1 || rank > dim) {
    throw std::invalid_argument("random_density: rank must lie in [1, dim]");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(dim, rank);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < rank; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = Complex(re, im);
    }
  }
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return rho;
}

BipartiteState max_entangled(int dim) {
  if (dim < 2) {
    throw std::invalid_argument("max_entangled: dim must be at least 2");
  }
  Vector psi = Vector::Zero(dim * dim);
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int s = 0; s < dim; ++s) {
    psi(s * dim + s) = amp;
  }
  return {{dim, dim}, psi * psi.adjoint()};
}

BipartiteState separable_sample(const DimSplit& split, int terms,
                                std::uint64_t seed) {
  if (terms < 1) {
    throw std::invalid_argument("separable_sample: terms must be positive");
  }
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> weights(static_cast<std::size_t>(terms));
  double total = 0.0;
  for (double& w : weights) {
    w = expo(rng);
    total += w;
  }
  const int n = split.total();
  Matrix rho = Matrix::Zero(n, n);
  for (int i = 0; i < terms; ++i) {
    const int rank_a = std::uniform_int_distribution<int>(1, split.dim_a)(rng);
    const int rank_b = std::uniform_int_distribution<int>(1, split.dim_b)(rng);
    const Matrix a = random_density(split.dim_a, rank_a, rng());
    const Matrix b = random_density(split.dim_b, rank_b, rng());
    rho += (weights[static_cast<std::size_t>(i)] / total) * kron(a, b);
  }
  return {split, rho};
}

BipartiteState separable_sample(const DimSplit& split, std::uint64_t seed) {
  return separable_sample(split, split.total(), seed);
}

BipartiteState CqAssembly::flatten() const {
  const int cond = dim_b * dim_theta;
  const int n = dim_x * cond;
  Matrix out = Matrix::Zero(n, n);
  for (int x = 0; x < dim_x; ++x) {
    for (int theta = 0; theta < dim_theta; ++theta) {
      const Matrix& blk = block(x, theta);
      for (int b = 0; b < dim_b; ++b) {
        for (int bp = 0; bp < dim_b; ++bp) {
          out(x * cond + b * dim_theta + theta,
              x * cond + bp * dim_theta + theta) = blk(b, bp);
        }
      }
    }
  }
  return {{dim_x, cond}, out};
}

namespace {

std::vector<Matrix> conditional_blocks(const BipartiteState& rho,
                                       const std::vector<Matrix>& operators) {
  const Matrix identity = Matrix::Identity(rho.split.dim_b, rho.split.dim_b);
  std::vector<Matrix> blocks;
  blocks.reserve(operators.size());
  for (const Matrix& p : operators) {
    blocks.push_back(
        partial_trace(kron(p, identity) * rho.matrix, rho.split, Subsystem::B));
  }
  return blocks;
}

}  // namespace

CqAssembly measure_cq_per_theta(const BipartiteState& rho, const Povm& povm) {
  if (povm.dim != rho.split.dim_a) {
    throw std::invalid_argument(
        "measure_cq_per_theta: measurement dim does not match system A");
  }
  CqAssembly cq;
  cq.kind = CqKind::per_theta;
  cq.dim_x = static_cast<int>(povm.operators.size());
  cq.dim_theta = 1;
  cq.dim_b = rho.split.dim_b;
  cq.blocks = conditional_blocks(rho, povm.operators);
  return cq;
}

CqAssembly measure_cq_full(const BipartiteState& rho, const MumSet& mums) {
  if (mums.dim != rho.split.dim_a) {
    throw std::invalid_argument(
        "measure_cq_full: measurement dim does not match system A");
  }
  const int d = mums.dim;
  CqAssembly cq;
  cq.kind = CqKind::full;
  cq.dim_x = d;
  cq.dim_theta = d + 1;
  cq.dim_b = rho.split.dim_b;
  cq.blocks.resize(static_cast<std::size_t>(d) * (d + 1));
  const double weight = 1.0 / (d + 1);
  for (int theta = 0; theta <= d; ++theta) {
    const std::vector<Matrix> blocks = conditional_blocks(
        rho, mums.povms[static_cast<std::size_t>(theta)].operators);
    for (int x = 0; x < d; ++x) {
      cq.blocks[static_cast<std::size_t>(x) * (d + 1) + theta] =
          weight * blocks[static_cast<std::size_t>(x)];
    }
  }
  return cq;
}

CqAssembly measure_sim_cq(const BipartiteState& rho, const SimSet& sim) {
  if (sim.dim != rho.split.dim_a) {
    throw std::invalid_argument(
        "measure_sim_cq: measurement dim does not match system A");
  }
  CqAssembly cq;
  cq.kind = CqKind::sim;
  cq.dim_x = sim.dim * sim.dim;
  cq.dim_theta = 1;
  cq.dim_b = rho.split.dim_b;
  cq.blocks = conditional_blocks(rho, sim.operators);
  return cq;
}

void validate_distribution(const JointDistribution& dist, double tolerance) {
  if (dist.p.size() == 0) {
    throw std::invalid_argument("distribution: empty");
  }
  if (dist.p.minCoeff() < -tolerance) {
    throw std::invalid_argument("distribution: negative probability " +
                                std::to_string(dist.p.minCoeff()));
  }
  if (std::abs(dist.p.sum() - 1.0) > tolerance) {
    throw std::invalid_argument("distribution: total probability " +
                                std::to_string(dist.p.sum()));
  }
}

JointDistribution joint_distribution(const BipartiteState& rho,
                                     const Povm& alice, const Povm& bob) {
  if (alice.dim != rho.split.dim_a || bob.dim != rho.split.dim_b) {
    throw std::invalid_argument(
        "joint_distribution: measurement dims do not match the split");
  }
  const std::vector<Matrix> blocks = conditional_blocks(rho, alice.operators);
  JointDistribution dist;
  dist.p.resize(static_cast<Eigen::Index>(blocks.size()),
                static_cast<Eigen::Index>(bob.operators.size()));
  for (std::size_t x = 0; x < blocks.size(); ++x) {
    for (std::size_t y = 0; y < bob.operators.size(); ++y) {
      dist.p(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) =
          real_trace_product(bob.operators[y], blocks[x]);
    }
  }
  return dist;
}

}  // namespace conical
