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

#include <doctest.h>

#include "conical/bases.hpp"
#include "conical/linalg.hpp"
#include "conical/measurements.hpp"
#include "conical/optimizer.hpp"
#include "conical/relations.hpp"
#include "conical/states.hpp"
#include "test_support.hpp"

namespace conical {
namespace {

using testing::random_unitary;

TEST_CASE("unitary parametrization round-trips through its parameters") {
  for (int n : {2, 3, 4}) {
    for (std::uint64_t seed : {1u, 2u}) {
      const Matrix u = random_unitary(n, seed * 17 + n);
      const RealVector params = unitary_params(u);
      REQUIRE(params.size() == n * n);
      const Matrix rebuilt = parametrize_unitary(params);
      CHECK(frobenius_distance(rebuilt, u) < 1e-9);
      CHECK((rebuilt.adjoint() * rebuilt - Matrix::Identity(n, n)).norm() <
            1e-10);
    }
  }
}

TEST_CASE("parametrized matrices are always unitary") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss(0.0, 2.0);
  for (int trial = 0; trial < 5; ++trial) {
    RealVector v(9);
    for (int i = 0; i < 9; ++i) {
      v(i) = gauss(rng);
    }
    const Matrix u = parametrize_unitary(v);
    CHECK((u.adjoint() * u - Matrix::Identity(3, 3)).norm() < 1e-12);
  }
}

TEST_CASE("projective povms from a unitary are rank-one and complete") {
  const Matrix u = random_unitary(3, 5);
  const Povm povm = projective_povm(u);
  CHECK_NOTHROW(validate_povm(povm));
  for (const Matrix& p : povm.operators) {
    CHECK(real_trace_product(p, p) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("objective matches the witness lhs for the same strategy") {
  const MumSet mub = mub_set(2);
  const BipartiteState rho{{2, 2}, random_density(4, 2, 11)};
  BobStrategy strategy;
  for (int theta = 0; theta < 3; ++theta) {
    strategy.unitaries.push_back(random_unitary(2, 40 + theta));
  }
  std::vector<Povm> bob;
  for (const Matrix& u : strategy.unitaries) {
    bob.push_back(projective_povm(u));
  }
  const double objective = witness_objective(rho, mub, strategy);
  const RelationReport r = mum_witness_state(rho, mub, bob);
  CHECK(objective == doctest::Approx(r.lhs).epsilon(1e-12));
}

TEST_CASE("optimizer recovers the conjugate strategy on the Bell state") {
  const MumSet mub = mub_set(2);
  OptimizerConfig cfg;
  cfg.seed = 3;
  const OptimizeResult result = optimize_bob(max_entangled(2), mub, cfg);
  CHECK(result.report.lhs <= 1e-6);
  CHECK_FALSE(result.report.pass);
  REQUIRE(result.strategy.unitaries.size() == 3);
  // the returned strategy reproduces the reported objective
  CHECK(witness_objective(max_entangled(2), mub, result.strategy) ==
        doctest::Approx(result.report.lhs).epsilon(1e-10));
}

TEST_CASE("optimizer never beats the default strategy on product fixtures") {
  const MumSet mub = mub_set(2);
  const Matrix a = random_density(2, 1, 21);
  const Matrix b = random_density(2, 1, 22);
  const BipartiteState rho{{2, 2}, kron(a, b)};
  OptimizerConfig cfg;
  cfg.restarts = 4;
  cfg.max_iters = 80;
  cfg.seed = 5;
  const OptimizeResult result = optimize_bob(rho, mub, cfg);
  CHECK(result.report.pass);
  CHECK(result.report.gap >= -1e-9);
}

TEST_CASE("more restarts never increase the optimized objective") {
  const MumSet mub = mub_set(2);
  const BipartiteState rho{{2, 2}, random_density(4, 2, 33)};
  double previous = std::numeric_limits<double>::infinity();
  for (int restarts : {1, 3, 6}) {
    OptimizerConfig cfg;
    cfg.restarts = restarts;
    cfg.max_iters = 60;
    cfg.seed = 9;
    const OptimizeResult result = optimize_bob(rho, mub, cfg);
    CHECK(result.report.lhs <= previous + 1e-12);
    previous = result.report.lhs;
  }
}

TEST_CASE("optimizer works when B has a different dimension than A") {
  const MumSet mub = mub_set(2);
  const BipartiteState rho{{2, 3}, random_density(6, 2, 44)};
  OptimizerConfig cfg;
  cfg.restarts = 3;
  cfg.max_iters = 60;
  cfg.seed = 2;
  const OptimizeResult result = optimize_bob(rho, mub, cfg);
  CHECK(result.report.lhs >= 0.0);
  REQUIRE(result.strategy.unitaries.size() == 3);
  CHECK(result.strategy.unitaries[0].rows() == 3);
  CHECK(witness_objective(rho, mub, result.strategy) ==
        doctest::Approx(result.report.lhs).epsilon(1e-10));
}

}  // namespace
}  // namespace conical
