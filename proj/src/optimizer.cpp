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

#include "conical/optimizer.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>

#include "conical/entropy.hpp"
#include "conical/linalg.hpp"

namespace conical {

Matrix parametrize_unitary(const RealVector& params) {
  const int n = static_cast<int>(std::lround(std::sqrt(
      static_cast<double>(params.size()))));
  if (static_cast<Eigen::Index>(n) * n != params.size() || n < 1) {
    throw std::invalid_argument(
        "parametrize_unitary: parameter count must be a square");
  }
  Matrix h = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    h(j, j) = params(j);
  }
  Eigen::Index idx = n;
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      h(j, k) = Complex(params(idx), params(idx + 1));
      h(k, j) = std::conj(h(j, k));
      idx += 2;
    }
  }
  const EigenSystem es = herm_eig(h);
  Vector phases(n);
  for (int j = 0; j < n; ++j) {
    phases(j) = Complex(std::cos(es.values(j)), std::sin(es.values(j)));
  }
  return es.vectors * phases.asDiagonal() * es.vectors.adjoint();
}

RealVector unitary_params(const Matrix& u) {
  const auto n = u.rows();
  if (u.cols() != n || n < 1) {
    throw std::invalid_argument("unitary_params: matrix must be square");
  }
  if (frobenius_distance(u.adjoint() * u, Matrix::Identity(n, n)) > 1e-6) {
    throw std::invalid_argument("unitary_params: matrix is not unitary");
  }
  // A unitary is normal, so its Schur form is diagonal up to roundoff and
  // the principal logarithm comes from the diagonal phases.
  Eigen::ComplexSchur<Matrix> schur(u);
  Vector phases(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    phases(j) = std::arg(schur.matrixT()(j, j));
  }
  const Matrix h =
      schur.matrixU() * phases.asDiagonal() * schur.matrixU().adjoint();
  RealVector params(n * n);
  for (Eigen::Index j = 0; j < n; ++j) {
    params(j) = h(j, j).real();
  }
  Eigen::Index idx = n;
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = j + 1; k < n; ++k) {
      params(idx) = h(j, k).real();
      params(idx + 1) = h(j, k).imag();
      idx += 2;
    }
  }
  return params;
}

Povm projective_povm(const Matrix& u) {
  Povm povm;
  povm.dim = static_cast<int>(u.rows());
  povm.operators.reserve(static_cast<std::size_t>(u.cols()));
  for (Eigen::Index y = 0; y < u.cols(); ++y) {
    const Vector v = u.col(y);
    povm.operators.push_back(v * v.adjoint());
  }
  return povm;
}

namespace {

std::vector<Matrix> round_blocks(const BipartiteState& rho, const Povm& povm) {
  const Matrix identity = Matrix::Identity(rho.split.dim_b, rho.split.dim_b);
  std::vector<Matrix> blocks;
  blocks.reserve(povm.operators.size());
  for (const Matrix& p : povm.operators) {
    blocks.push_back(partial_trace(kron(p, identity) * rho.matrix, rho.split,
                                   Subsystem::B));
  }
  return blocks;
}

double round_entropy(const std::vector<Matrix>& blocks, const Matrix& u) {
  JointDistribution dist;
  dist.p.resize(static_cast<Eigen::Index>(blocks.size()), u.cols());
  for (std::size_t x = 0; x < blocks.size(); ++x) {
    const Matrix m = u.adjoint() * blocks[x] * u;
    for (Eigen::Index y = 0; y < u.cols(); ++y) {
      dist.p(static_cast<Eigen::Index>(x), y) = m(y, y).real();
    }
  }
  return h2_classical_conditional(dist);
}

// Golden-section minimization; returns the best evaluated (point, value).
std::pair<double, double> golden_min(
    const std::function<double(double)>& func, double lo, double hi,
    int iters) {
  constexpr double inv_phi = 0.6180339887498949;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = func(c);
  double fd = func(d);
  for (int i = 0; i < iters; ++i) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = func(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = func(d);
    }
  }
  return fc < fd ? std::make_pair(c, fc) : std::make_pair(d, fd);
}

struct RoundOptimum {
  double value = std::numeric_limits<double>::infinity();
  Matrix unitary;
};

RoundOptimum optimize_round(const std::vector<Matrix>& blocks,
                            const std::vector<Matrix>& seeds,
                            std::uint64_t seed, const OptimizerConfig& cfg) {
  const int dim_b = static_cast<int>(blocks.at(0).rows());
  const Eigen::Index coords = static_cast<Eigen::Index>(dim_b) * dim_b;
  constexpr double span = std::numbers::pi / 2.0;
  constexpr int golden_iters = 25;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto eval = [&blocks](const RealVector& v) {
    return round_entropy(blocks, parametrize_unitary(v));
  };

  RoundOptimum best;
  for (int start = 0; start < cfg.restarts; ++start) {
    RealVector v;
    if (start < static_cast<int>(seeds.size())) {
      v = unitary_params(seeds[static_cast<std::size_t>(start)]);
    } else {
      v.resize(coords);
      for (Eigen::Index i = 0; i < coords; ++i) {
        v(i) = gauss(rng);
      }
    }
    double fv = eval(v);
    for (int sweep = 0; sweep < cfg.max_iters; ++sweep) {
      const double before = fv;
      for (Eigen::Index i = 0; i < coords; ++i) {
        const double center = v(i);
        const auto line = [&](double s) {
          v(i) = s;
          const double val = eval(v);
          v(i) = center;
          return val;
        };
        const auto [point, value] =
            golden_min(line, center - span, center + span, golden_iters);
        if (value < fv) {
          v(i) = point;
          fv = value;
        }
      }
      if (before - fv < cfg.convergence_tol) {
        break;
      }
    }
    if (fv < best.value) {
      best.value = fv;
      best.unitary = parametrize_unitary(v);
    }
  }
  return best;
}

}  // namespace

double witness_objective(const BipartiteState& rho, const MumSet& mums,
                         const BobStrategy& strategy) {
  if (mums.dim != rho.split.dim_a) {
    throw std::invalid_argument(
        "witness_objective: measurement dim does not match system A");
  }
  if (strategy.unitaries.size() != mums.povms.size()) {
    throw std::invalid_argument(
        "witness_objective: expected one unitary per measurement round");
  }
  double sum = 0.0;
  for (std::size_t theta = 0; theta < mums.povms.size(); ++theta) {
    const Matrix& u = strategy.unitaries[theta];
    if (u.rows() != rho.split.dim_b || u.cols() != rho.split.dim_b) {
      throw std::invalid_argument(
          "witness_objective: unitary does not match system B");
    }
    sum += round_entropy(round_blocks(rho, mums.povms[theta]), u);
  }
  return sum / static_cast<double>(mums.povms.size());
}

OptimizeResult optimize_bob(const BipartiteState& rho, const MumSet& mums,
                            const OptimizerConfig& cfg) {
  if (mums.dim != rho.split.dim_a) {
    throw std::invalid_argument(
        "optimize_bob: measurement dim does not match system A");
  }
  if (cfg.restarts < 1 || cfg.max_iters < 1 || !(cfg.convergence_tol > 0.0)) {
    throw std::invalid_argument("optimize_bob: invalid config");
  }
  const int d = mums.dim;
  const int db = rho.split.dim_b;

  OptimizeResult result;
  result.strategy.unitaries.resize(static_cast<std::size_t>(d) + 1);
  double sum = 0.0;
  for (int theta = 0; theta <= d; ++theta) {
    const Povm& povm = mums.povms[static_cast<std::size_t>(theta)];
    const std::vector<Matrix> blocks = round_blocks(rho, povm);

    std::vector<Matrix> seeds;
    Matrix weighted = Matrix::Zero(db, db);
    for (std::size_t x = 0; x < blocks.size(); ++x) {
      weighted += static_cast<double>(x + 1) * blocks[x];
    }
    seeds.push_back(herm_eig(weighted).vectors);
    if (db == d) {
      Matrix transposed = Matrix::Zero(d, d);
      for (std::size_t x = 0; x < povm.operators.size(); ++x) {
        transposed +=
            static_cast<double>(x + 1) * povm.operators[x].transpose();
      }
      seeds.push_back(herm_eig(transposed).vectors);
    }

    // Per-round sub-seed keeps each round's start list a prefix-extension
    // as restarts grow.
    const std::uint64_t round_seed =
        cfg.seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(theta) + 1);
    const RoundOptimum opt = optimize_round(blocks, seeds, round_seed, cfg);
    result.strategy.unitaries[static_cast<std::size_t>(theta)] = opt.unitary;
    sum += opt.value;
  }
  const double objective = sum / (d + 1.0);
  result.report = make_report(
      "mum-witness-optimized", RelationKind::inequality, objective,
      witness_threshold(d, mums.kappa), 1e-6,
      {{"d", static_cast<double>(d)},
       {"dB", static_cast<double>(db)},
       {"kappa", mums.kappa},
       {"restarts", static_cast<double>(cfg.restarts)},
       {"seed", static_cast<double>(cfg.seed)}});
  return result;
}

}  // namespace conical
