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

#include "conical/bases.hpp"
#include "conical/entropy.hpp"
#include "conical/linalg.hpp"
#include "conical/measurements.hpp"
#include "conical/relations.hpp"
#include "conical/states.hpp"
#include "test_support.hpp"

namespace conical {
namespace {

using testing::naive_kron;
using testing::random_psd;

TEST_CASE("make_report applies equality and inequality semantics") {
  const RelationReport eq =
      make_report("eq", RelationKind::equality, 1.0, 1.0 + 5e-9, 1e-8, {});
  CHECK(eq.pass);
  CHECK(eq.gap == doctest::Approx(-5e-9));
  const RelationReport eq_bad =
      make_report("eq", RelationKind::equality, 1.0, 1.1, 1e-8, {});
  CHECK_FALSE(eq_bad.pass);
  const RelationReport ge =
      make_report("ge", RelationKind::inequality, 2.0, 1.0, 1e-8, {});
  CHECK(ge.pass);
  const RelationReport ge_bad =
      make_report("ge", RelationKind::inequality, 1.0, 2.0, 1e-8, {});
  CHECK_FALSE(ge_bad.pass);
}

TEST_CASE("measured-vs-memory equality holds with closed oracle points") {
  const MumSet mub = mub_set(2);

  // maximally entangled: H2(A|B) = -1, so the rhs collapses to zero
  const RelationReport bell = mum_uncertainty_equality(max_entangled(2), mub);
  CHECK(bell.pass);
  CHECK(std::abs(bell.lhs) < 1e-10);
  CHECK(std::abs(bell.rhs) < 1e-10);

  // maximally mixed: both sides equal 1 bit
  const BipartiteState mixed{{2, 2}, Matrix::Identity(4, 4) / 4.0};
  const RelationReport flat = mum_uncertainty_equality(mixed, mub);
  CHECK(flat.pass);
  CHECK(flat.lhs == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("measured-vs-memory equality holds on random instances") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const HermitianBasis basis = random_rotated_basis(3, seed);
    const MumSet set = build_mum_set(basis, mum_max_t(basis) * 0.8);
    const BipartiteState rho{{3, 2}, random_density(6, 1 + seed % 6, seed)};
    const RelationReport r = mum_uncertainty_equality(rho, set);
    CHECK(r.pass);
    CHECK(std::abs(r.gap) < 1e-9);
    CHECK(r.context.at("kappa") == doctest::Approx(set.kappa));
  }
}

TEST_CASE("guessing probabilities sum to the design expression") {
  const MumSet mub = mub_set(2);
  const RelationReport bell = pg_guessing_sum(max_entangled(2), mub);
  CHECK(bell.pass);
  CHECK(bell.lhs == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(bell.rhs == doctest::Approx(3.0).epsilon(1e-10));

  const BipartiteState rho{{2, 3}, random_density(6, 4, 5)};
  const MumSet set = build_mum_set_max(gell_mann_basis(2));
  const RelationReport r = pg_guessing_sum(rho, set);
  CHECK(r.pass);
  CHECK(std::abs(r.gap) < 1e-9);
}

TEST_CASE("entropy-sum bound is an inequality, tight for balanced sources") {
  const MumSet mub = mub_set(2);
  // Bell state: each per-measurement entropy is zero, spread vanishes
  const RelationReport bell = entropy_sum_bound(max_entangled(2), mub);
  CHECK(bell.pass);
  CHECK(std::abs(bell.gap) < 1e-10);
  CHECK(bell.context.at("theta_spread") < 1e-10);

  // pure product state: measurements disagree, the bound is strict
  Matrix zero = Matrix::Zero(2, 2);
  zero(0, 0) = 1.0;
  const BipartiteState product{{2, 2},
                               naive_kron(zero, Matrix::Identity(2, 2) / 2.0)};
  const RelationReport strict = entropy_sum_bound(product, mub);
  CHECK(strict.pass);
  CHECK(strict.gap > 0.05);
  CHECK(strict.context.at("theta_spread") > 0.1);

  for (std::uint64_t seed : {7u, 8u}) {
    const BipartiteState rho{{3, 3}, random_density(9, 3, seed)};
    const MumSet set = build_mum_set_max(random_rotated_basis(3, seed));
    CHECK(entropy_sum_bound(rho, set).pass);
  }
}

TEST_CASE("witness threshold takes its closed values") {
  CHECK(witness_threshold(2, 1.0) ==
        doctest::Approx(std::log2(3.0) - 1.0).epsilon(1e-14));
  CHECK(witness_threshold(3, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(witness_threshold(2, 0.75) ==
        doctest::Approx(std::log2(3.0) - std::log2(1.75)).epsilon(1e-14));
  CHECK_THROWS_AS((void)witness_threshold(2, 0.5), std::invalid_argument);
  CHECK_THROWS_AS((void)witness_threshold(2, 1.2), std::invalid_argument);
}

TEST_CASE("witness fires on hand-built distributions") {
  // perfectly correlated outcomes for every measurement: zero conditional
  // entropy, far below any threshold
  RealMatrix corr = RealMatrix::Zero(2, 2);
  corr(0, 0) = 0.5;
  corr(1, 1) = 0.5;
  const std::vector<JointDistribution> correlated(3, {corr});
  const RelationReport fired = mum_witness(correlated, 2, 1.0);
  CHECK_FALSE(fired.pass);
  CHECK(fired.lhs == doctest::Approx(0.0));

  const std::vector<JointDistribution> flat(
      3, {RealMatrix::Constant(2, 2, 0.25)});
  const RelationReport calm = mum_witness(flat, 2, 1.0);
  CHECK(calm.pass);
  CHECK(calm.lhs == doctest::Approx(1.0));
}

TEST_CASE("transposed strategy makes the witness detect entanglement") {
  for (int d : {2, 3}) {
    const MumSet mub = mub_set(d);
    const std::vector<Povm> bob = transposed_bob_povms(mub);
    for (const Povm& povm : bob) {
      CHECK_NOTHROW(validate_povm(povm));
    }
    const RelationReport r =
        mum_witness_state(max_entangled(d), mub, bob);
    CHECK_FALSE(r.pass);
    CHECK(r.lhs < 1e-10);
    CHECK(r.rhs == doctest::Approx(witness_threshold(d, 1.0)));

    // the measured statistics are perfectly correlated per measurement
    const std::vector<JointDistribution> dists =
        measured_distributions(max_entangled(d), mub, bob);
    for (const JointDistribution& dist : dists) {
      for (int x = 0; x < d; ++x) {
        CHECK(dist.p(x, x) == doctest::Approx(1.0 / d).epsilon(1e-11));
      }
    }
  }
}

TEST_CASE("witness stays quiet on separable states") {
  const MumSet mub = mub_set(2);
  const std::vector<Povm> bob = transposed_bob_povms(mub);
  for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
    const BipartiteState rho = separable_sample({2, 2}, seed);
    const RelationReport r = mum_witness_state(rho, mub, bob);
    CHECK(r.pass);
    CHECK(r.gap >= -1e-10);
  }
}

TEST_CASE("classical measured entropy dominates the quantum per-theta value") {
  const MumSet mub = mub_set(2);
  const std::vector<Povm> bob = transposed_bob_povms(mub);
  for (std::uint64_t seed : {11u, 12u}) {
    const BipartiteState rho{{2, 2}, random_density(4, 3, seed)};
    const std::vector<JointDistribution> dists =
        measured_distributions(rho, mub, bob);
    for (int theta = 0; theta < 3; ++theta) {
      const CqAssembly cq = measure_cq_per_theta(
          rho, mub.povms[static_cast<std::size_t>(theta)]);
      const double quantum = h2_conditional(cq.flatten());
      const double classical = h2_classical_conditional(
          dists[static_cast<std::size_t>(theta)]);
      CHECK(classical >= quantum - 1e-10);
    }
  }
}

TEST_CASE("sim equality holds with closed oracle points") {
  const SimSet sic = build_sim_set(gell_mann_basis(2), sic_t(2));
  const RelationReport bell = sim_uncertainty_equality(max_entangled(2), sic);
  CHECK(bell.pass);
  CHECK(bell.lhs == doctest::Approx(1.0).epsilon(1e-10));
  // corollary form at eta = 1/d^2
  const double corollary =
      std::log2(2.0 * 3.0) -
      std::log2(1.0 + std::exp2(-h2_conditional(max_entangled(2))));
  CHECK(bell.rhs == doctest::Approx(corollary).epsilon(1e-12));

  for (std::uint64_t seed : {3u, 4u}) {
    const BipartiteState rho{{3, 2}, random_density(6, 2, seed)};
    const SimSet sim = build_sim_set_max(random_rotated_basis(3, seed));
    const RelationReport r = sim_uncertainty_equality(rho, sim);
    CHECK(r.pass);
    CHECK(std::abs(r.gap) < 1e-9);
  }
}

TEST_CASE("sim equality reduces to the purity form without memory") {
  const SimSet sic = build_sim_set(gell_mann_basis(2), sic_t(2));
  const BipartiteState mixed{{2, 1}, Matrix::Identity(2, 2) / 2.0};
  const RelationReport r = sim_uncertainty_equality(mixed, sic);
  CHECK(r.pass);
  CHECK(r.lhs == doctest::Approx(2.0).epsilon(1e-10));

  const Matrix rho_a = random_density(2, 2, 9);
  const BipartiteState generic{{2, 1}, rho_a};
  const RelationReport g = sim_uncertainty_equality(generic, sic);
  const double purity = real_trace_product(rho_a, rho_a);
  const double stated = -std::log2(design_l(2, sic.eta) +
                                   design_r(2, sic.eta) * purity);
  CHECK(g.lhs == doctest::Approx(stated).epsilon(1e-10));
}

TEST_CASE("sim witness separates entangled from separable fixtures") {
  const SimSet sic = build_sim_set(gell_mann_basis(2), sic_t(2));
  CHECK(sim_witness_threshold(2, 0.25) ==
        doctest::Approx(std::log2(3.0)).epsilon(1e-13));
  const RelationReport bell = sim_witness(max_entangled(2), sic);
  CHECK_FALSE(bell.pass);
  for (std::uint64_t seed : {21u, 22u, 23u}) {
    CHECK(sim_witness(separable_sample({2, 2}, seed), sic).pass);
  }
}

TEST_CASE("relation helpers reject mismatched dimensions") {
  const MumSet set = build_mum_set_max(gell_mann_basis(2));
  const BipartiteState rho{{3, 2}, random_density(6, 2, 31)};
  CHECK_THROWS_AS((void)mum_uncertainty_equality(rho, set),
                  std::invalid_argument);
  const SimSet sim = build_sim_set_max(gell_mann_basis(2));
  CHECK_THROWS_AS((void)sim_uncertainty_equality(rho, sim),
                  std::invalid_argument);
}

}  // namespace
}  // namespace conical
