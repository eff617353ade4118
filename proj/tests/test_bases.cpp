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
#include "conical/linalg.hpp"
#include "test_support.hpp"

namespace conical {
namespace {

using testing::naive_kron;
using testing::pauli_matrices;

TEST_CASE("canonical basis is orthonormal traceless hermitian") {
  for (int d : {2, 3, 4, 5}) {
    const HermitianBasis basis = gell_mann_basis(d);
    CHECK(basis.dim == d);
    CHECK(static_cast<int>(basis.operators.size()) == d * d - 1);
    CHECK_NOTHROW(validate(basis));
  }
}

TEST_CASE("d=2 canonical basis is the scaled Pauli triple") {
  const HermitianBasis basis = gell_mann_basis(2);
  const std::vector<Matrix> sigma = pauli_matrices();
  const double s = 1.0 / std::sqrt(2.0);
  bool found_x = false;
  bool found_y = false;
  bool found_z = false;
  for (const Matrix& f : basis.operators) {
    found_x = found_x || frobenius_distance(f, s * sigma[0]) < 1e-14;
    found_y = found_y || frobenius_distance(f, s * sigma[1]) < 1e-14;
    found_z = found_z || frobenius_distance(f, s * sigma[2]) < 1e-14;
  }
  CHECK(found_x);
  CHECK(found_y);
  CHECK(found_z);
}

TEST_CASE("grid indexing is a bijection onto 0..d^2-2") {
  const int d = 4;
  std::vector<int> hits(static_cast<std::size_t>(d * d - 1), 0);
  for (int theta = 0; theta <= d; ++theta) {
    for (int x = 0; x < d - 1; ++x) {
      const int k = grid_flat_index(d, x, theta);
      REQUIRE(k >= 0);
      REQUIRE(k < d * d - 1);
      hits[static_cast<std::size_t>(k)] += 1;
      const auto [xx, tt] = grid_coords(d, k);
      CHECK(xx == x);
      CHECK(tt == theta);
    }
  }
  for (int h : hits) {
    CHECK(h == 1);
  }
  CHECK_THROWS_AS((void)grid_flat_index(d, d - 1, 0), std::invalid_argument);
  CHECK_THROWS_AS((void)grid_flat_index(d, 0, d + 1), std::invalid_argument);
}

TEST_CASE("rotated bases stay orthonormal and span the same space") {
  for (std::uint64_t seed : {3u, 14u, 159u}) {
    const HermitianBasis basis = random_rotated_basis(3, seed);
    CHECK_NOTHROW(validate(basis));
    // the rotation preserves sum_k F_k (x) F_k
    Matrix sum = Matrix::Zero(9, 9);
    for (const Matrix& f : basis.operators) {
      sum += naive_kron(f, f);
    }
    const Matrix target =
        swap_operator(3) - Matrix::Identity(9, 9) / 3.0;
    CHECK(frobenius_distance(sum, target) < 1e-12);
  }
}

TEST_CASE("random orthogonal matrices are orthogonal and deterministic") {
  const RealMatrix q = random_orthogonal(8, 123);
  CHECK((q * q.transpose() - RealMatrix::Identity(8, 8)).norm() < 1e-12);
  const RealMatrix q2 = random_orthogonal(8, 123);
  CHECK((q - q2).norm() == 0.0);
  const RealMatrix q3 = random_orthogonal(8, 124);
  CHECK((q - q3).norm() > 1e-3);
}

TEST_CASE("design identity residual vanishes exactly for the Pauli basis") {
  CHECK(design_identity_residual(gell_mann_basis(2)) < 1e-12);
}

TEST_CASE("design identity residual detects a broken basis") {
  HermitianBasis basis = gell_mann_basis(2);
  basis.operators[0] *= 1.1;
  CHECK(design_identity_residual(basis) > 1e-3);
  CHECK_THROWS_AS(validate(basis), std::invalid_argument);
}

TEST_CASE("validate rejects wrong operator counts and shapes") {
  HermitianBasis basis = gell_mann_basis(2);
  basis.operators.pop_back();
  CHECK_THROWS_AS(validate(basis), std::invalid_argument);
  HermitianBasis wide = gell_mann_basis(2);
  wide.operators[0] = Matrix::Zero(3, 3);
  CHECK_THROWS_AS(validate(wide), std::invalid_argument);
}

}  // namespace
}  // namespace conical
