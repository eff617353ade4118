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

#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include <Eigen/Dense>

#include "conical/bases.hpp"
#include "conical/linalg.hpp"
#include "conical/measurements.hpp"
#include "conical/states.hpp"
#include "test_support.hpp"

namespace conical {
namespace {

using testing::naive_kron;
using testing::naive_trace_out_a;

TEST_CASE("random densities are valid states of the requested rank") {
  for (int rank : {1, 2, 4}) {
    const Matrix rho = random_density(4, rank, 99 + rank);
    CHECK(is_hermitian(rho));
    CHECK(std::abs(rho.trace().real() - 1.0) < 1e-12);
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
    CHECK(es.eigenvalues().minCoeff() > -1e-12);
    int positive = 0;
    for (int k = 0; k < 4; ++k) {
      positive += es.eigenvalues()(k) > 1e-10 ? 1 : 0;
    }
    CHECK(positive == rank);
  }
  const Matrix a = random_density(3, 2, 5);
  const Matrix b = random_density(3, 2, 5);
  CHECK(frobenius_distance(a, b) == 0.0);
}

TEST_CASE("max entangled state is pure with maximally mixed marginals") {
  for (int d : {2, 3, 4}) {
    const BipartiteState phi = max_entangled(d);
    CHECK_NOTHROW(validate_state(phi));
    CHECK(real_trace_product(phi.matrix, phi.matrix) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(frobenius_distance(marginal(phi, Subsystem::B),
                             Matrix::Identity(d, d) / d) < 1e-12);
    CHECK(frobenius_distance(marginal(phi, Subsystem::A),
                             Matrix::Identity(d, d) / d) < 1e-12);
  }
}

TEST_CASE("ricochet: local operators act on the mirrored side") {
  const int d = 3;
  const BipartiteState phi = max_entangled(d);
  const Matrix a = testing::random_psd(d, 3, 7);
  const Matrix lhs = partial_trace(
      naive_kron(a, Matrix::Identity(d, d)) * phi.matrix, {d, d},
      Subsystem::B);
  CHECK(frobenius_distance(lhs, a.transpose() / d) < 1e-13);
}

TEST_CASE("separable samples are valid states with positive partial "
          "transpose") {
  for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
    const BipartiteState rho = separable_sample({2, 3}, seed);
    CHECK_NOTHROW(validate_state(rho));
    // partial transpose on B stays PSD for separable states
    Matrix pt = Matrix::Zero(6, 6);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        pt.block(i * 3, j * 3, 3, 3) =
            rho.matrix.block(i * 3, j * 3, 3, 3).transpose();
      }
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(pt);
    CHECK(es.eigenvalues().minCoeff() > -1e-10);
  }
}

TEST_CASE("validate_state rejects malformed inputs") {
  BipartiteState rho{{2, 2}, Matrix::Identity(4, 4) / 4.0};
  CHECK_NOTHROW(validate_state(rho));
  rho.matrix(0, 0) = 0.5;
  CHECK_THROWS_AS(validate_state(rho), std::invalid_argument);
  BipartiteState shape{{2, 3}, Matrix::Identity(4, 4) / 4.0};
  CHECK_THROWS_AS(validate_state(shape), std::invalid_argument);
  BipartiteState negative{{2, 2}, Matrix::Identity(4, 4) / 2.0};
  negative.matrix(3, 3) = -0.25;
  CHECK_THROWS_AS(validate_state(negative), std::invalid_argument);
}

TEST_CASE("per-measurement assembly blocks are the partial Born traces") {
  const BipartiteState rho{{2, 3},
                           random_density(6, 3, 13)};
  const MumSet set = build_mum_set_max(gell_mann_basis(2));
  const CqAssembly cq = measure_cq_per_theta(rho, set.povms[1]);
  REQUIRE(cq.dim_x == 2);
  REQUIRE(cq.dim_b == 3);
  Matrix block_sum = Matrix::Zero(3, 3);
  for (int x = 0; x < 2; ++x) {
    const Matrix expected = naive_trace_out_a(
        naive_kron(set.op(x, 1), Matrix::Identity(3, 3)) * rho.matrix, 2, 3);
    CHECK(frobenius_distance(cq.block(x), expected) < 1e-13);
    block_sum += cq.block(x);
  }
  CHECK(frobenius_distance(block_sum, marginal(rho, Subsystem::B)) < 1e-13);

  const BipartiteState flat = cq.flatten();
  CHECK_NOTHROW(validate_state(flat));
  CHECK(flat.split.dim_a == 2);
  CHECK(flat.split.dim_b == 3);
}

TEST_CASE("full assembly flattening keeps the register order X, B, Theta") {
  const BipartiteState rho{{2, 2}, random_density(4, 2, 17)};
  const MumSet set = build_mum_set_max(gell_mann_basis(2));
  const CqAssembly cq = measure_cq_full(rho, set);
  REQUIRE(cq.dim_theta == 3);
  const BipartiteState flat = cq.flatten();
  CHECK(flat.split.dim_a == 2);
  CHECK(flat.split.dim_b == 6);
  CHECK_NOTHROW(validate_state(flat));
  // entry (x b theta, x b' theta) carries block(x, theta)(b, b')
  for (int x = 0; x < 2; ++x) {
    for (int theta = 0; theta < 3; ++theta) {
      for (int b1 = 0; b1 < 2; ++b1) {
        for (int b2 = 0; b2 < 2; ++b2) {
          const int row = x * 6 + b1 * 3 + theta;
          const int col = x * 6 + b2 * 3 + theta;
          CHECK(std::abs(flat.matrix(row, col) -
                         cq.block(x, theta)(b1, b2)) < 1e-14);
        }
      }
    }
  }
  // off-diagonal blocks in x or theta vanish
  CHECK(std::abs(flat.matrix(0 * 6 + 0 * 3 + 0, 1 * 6 + 0 * 3 + 0)) == 0.0);
  CHECK(std::abs(flat.matrix(0 * 6 + 0 * 3 + 0, 0 * 6 + 0 * 3 + 1)) == 0.0);
}

TEST_CASE("sim assembly matches direct Born traces") {
  const BipartiteState rho{{2, 2}, random_density(4, 4, 19)};
  const SimSet sim = build_sim_set_max(gell_mann_basis(2));
  const CqAssembly cq = measure_sim_cq(rho, sim);
  REQUIRE(cq.dim_x == 4);
  for (int x = 0; x < 4; ++x) {
    const Matrix expected = naive_trace_out_a(
        naive_kron(sim.operators[static_cast<std::size_t>(x)],
                   Matrix::Identity(2, 2)) *
            rho.matrix,
        2, 2);
    CHECK(frobenius_distance(cq.block(x), expected) < 1e-13);
  }
}

TEST_CASE("joint distributions are normalized Born probabilities") {
  const BipartiteState rho{{2, 2}, random_density(4, 2, 23)};
  const MumSet set = mub_set(2);
  const JointDistribution dist =
      joint_distribution(rho, set.povms[0], set.povms[2]);
  CHECK_NOTHROW(validate_distribution(dist));
  CHECK(dist.p.sum() == doctest::Approx(1.0).epsilon(1e-12));
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const Matrix effect =
          naive_kron(set.povms[0].operators[static_cast<std::size_t>(x)],
                     set.povms[2].operators[static_cast<std::size_t>(y)]);
      const double born = (effect * rho.matrix).trace().real();
      CHECK(dist.p(x, y) == doctest::Approx(born).epsilon(1e-12));
    }
  }
}

TEST_CASE("validate_distribution rejects negatives and bad normalization") {
  JointDistribution dist{RealMatrix::Constant(2, 2, 0.25)};
  CHECK_NOTHROW(validate_distribution(dist));
  dist.p(0, 0) = -0.1;
  dist.p(1, 1) = 0.6;
  CHECK_THROWS_AS(validate_distribution(dist), std::invalid_argument);
  JointDistribution unnorm{RealMatrix::Constant(2, 2, 0.3)};
  CHECK_THROWS_AS(validate_distribution(unnorm), std::invalid_argument);
}

}  // namespace
}  // namespace conical
