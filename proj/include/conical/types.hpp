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

#ifndef CONICAL_TYPES_HPP
#define CONICAL_TYPES_HPP

#include <complex>

#include <Eigen/Dense>

namespace conical {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Dimension split of a bipartite system; the annotated matrix acts on a
// (dim_a * dim_b)-dimensional space with the A factor varying slowest.
struct DimSplit {
  int dim_a = 1;
  int dim_b = 1;

  int total() const { return dim_a * dim_b; }
  bool operator==(const DimSplit&) const = default;
};

namespace tol {
// Relative Frobenius tolerance for treating a matrix as Hermitian.
inline constexpr double hermitian = 1e-9;
// Relative tolerance for negative eigenvalues of nominally PSD matrices.
inline constexpr double psd = 1e-9;
// Pseudo-inverse support cutoff, relative to the largest eigenvalue.
inline constexpr double support_cutoff = 1e-12;
// POVM / measurement-set condition tolerance.
inline constexpr double povm = 1e-9;
// Density-operator validation tolerance.
inline constexpr double state = 1e-10;
// Default tolerance for entropy equalities, in bits.
inline constexpr double relation = 1e-8;
}  // namespace tol

}  // namespace conical

#endif
