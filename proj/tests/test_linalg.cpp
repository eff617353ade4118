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

#include "conical/linalg.hpp"
#include "test_support.hpp"

namespace conical {
namespace {

using testing::naive_kron;
using testing::naive_trace_out_a;
using testing::naive_trace_out_b;
using testing::random_psd;
using testing::random_unitary;

TEST_CASE("kron matches the index-loop definition") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const Matrix a = random_psd(3, 2, seed);
    const Matrix b = random_psd(2, 2, seed + 100);
    CHECK(frobenius_distance(kron(a, b), naive_kron(a, b)) < 1e-14);
  }
  const Matrix a = random_psd(2, 1, 9);
  const Matrix b = random_psd(5, 3, 10);
  CHECK(frobenius_distance(kron(a, b), naive_kron(a, b)) < 1e-14);
}

TEST_CASE("partial trace matches the index-loop definition") {
  const DimSplit split{3, 4};
  const Matrix m = random_psd(12, 5, 77);
  CHECK(frobenius_distance(partial_trace(m, split, Subsystem::A),
                           naive_trace_out_b(m, 3, 4)) < 1e-14);
  CHECK(frobenius_distance(partial_trace(m, split, Subsystem::B),
                           naive_trace_out_a(m, 3, 4)) < 1e-14);
}

TEST_CASE("partial trace of a product factorizes") {
  const Matrix a = random_psd(3, 3, 5);
  const Matrix b = random_psd(5, 2, 6);
  const Matrix prod = kron(a, b);
  CHECK(frobenius_distance(partial_trace(prod, {3, 5}, Subsystem::A), a) <
        1e-13);
  CHECK(frobenius_distance(partial_trace(prod, {3, 5}, Subsystem::B), b) <
        1e-13);
}

TEST_CASE("real_trace_product equals Re tr[ab]") {
  const Matrix a = random_psd(4, 2, 11);
  const Matrix b = random_unitary(4, 12);
  const Complex direct = (a * b).trace();
  CHECK(real_trace_product(a, b) == doctest::Approx(direct.real()).epsilon(1e-13));
}

TEST_CASE("herm_eig reconstructs and orders descending") {
  const Matrix rho = random_psd(5, 5, 21);
  const EigenSystem es = herm_eig(rho);
  Matrix rebuilt = Matrix::Zero(5, 5);
  for (int k = 0; k < 5; ++k) {
    rebuilt += es.values(k) * es.vectors.col(k) * es.vectors.col(k).adjoint();
  }
  CHECK(frobenius_distance(rebuilt, rho) < 1e-12);
  for (int k = 0; k + 1 < 5; ++k) {
    CHECK(es.values(k) >= es.values(k + 1));
  }
  CHECK((es.vectors.adjoint() * es.vectors - Matrix::Identity(5, 5)).norm() <
        1e-12);
}

TEST_CASE("psd_power agrees with eigen-decomposition powers") {
  const Matrix rho = random_psd(4, 4, 31);
  const Matrix sqrt = psd_power(rho, 0.5);
  CHECK(frobenius_distance(sqrt * sqrt, rho) < 1e-12);
  const Matrix inv = psd_power(rho, -1.0);
  CHECK(frobenius_distance(rho * inv, Matrix::Identity(4, 4)) < 1e-10);
}

TEST_CASE("psd_power uses the support pseudo-inverse on singular input") {
  const Matrix rho = random_psd(4, 2, 41);
  const Matrix inv_sqrt = psd_power(rho, -0.5);
  const Matrix proj = support_projector(rho);
  CHECK(frobenius_distance(inv_sqrt * rho * inv_sqrt, proj) < 1e-10);
  CHECK(frobenius_distance(proj * proj, proj) < 1e-12);
  CHECK(std::abs(proj.trace().real() - 2.0) < 1e-10);
}

TEST_CASE("psd_power rejects negative operators") {
  Matrix m = Matrix::Identity(2, 2);
  m(1, 1) = -0.5;
  CHECK_THROWS_AS((void)psd_power(m, 0.5), std::invalid_argument);
}

TEST_CASE("swap operator exchanges product factors") {
  const int n = 3;
  const Matrix f = swap_operator(n);
  const Matrix a = random_psd(n, 2, 51);
  const Matrix b = random_psd(n, 3, 52);
  CHECK(frobenius_distance(f * kron(a, b) * f, kron(b, a)) < 1e-13);
  const Complex overlap = (kron(a, b) * f).trace();
  const Complex product = (a * b).trace();
  CHECK(std::abs(overlap - product) < 1e-13);
  CHECK(frobenius_distance(f * f, Matrix::Identity(n * n, n * n)) < 1e-14);
}

TEST_CASE("is_hermitian flags asymmetry") {
  Matrix m = random_psd(3, 3, 61);
  CHECK(is_hermitian(m));
  m(0, 1) += Complex(0.0, 1e-3);
  CHECK_FALSE(is_hermitian(m));
}

TEST_CASE("fidelity of a state with itself is one") {
  const Matrix rho = random_psd(3, 2, 71);
  CHECK(fidelity(rho, rho) == doctest::Approx(1.0).epsilon(1e-9));
  const Matrix sigma = random_psd(3, 3, 72);
  const double f = fidelity(rho, sigma);
  CHECK(f >= 0.0);
  CHECK(f <= 1.0 + 1e-12);
}

}  // namespace
}  // namespace conical
