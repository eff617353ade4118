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

#ifndef CONICAL_BASES_HPP
#define CONICAL_BASES_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "conical/types.hpp"

namespace conical {

// Orthonormal basis {F_k} of the traceless Hermitian operators on a
// d-dimensional space: d^2 - 1 operators with tr[F_j F_k] = delta_jk.
//
// The flat list doubles as a (d+1) x (d-1) grid used by the measurement
// constructions: block(x, theta) with x in [0, d-2], theta in [0, d] is the
// flat element theta*(d-1) + x (theta-major rows, matching the block-matrix
// relabeling).
struct HermitianBasis {
  int dim = 0;
  std::vector<Matrix> operators;

  const Matrix& block(int x, int theta) const;
};

int grid_flat_index(int dim, int x, int theta);
std::pair<int, int> grid_coords(int dim, int k);  // -> (x, theta)

// Throws std::invalid_argument if the operators are not an orthonormal
// traceless Hermitian basis within tolerance.
void validate(const HermitianBasis& basis, double tolerance = 1e-9);

// Generalized Gell-Mann matrices normalized to tr[F_j F_k] = delta_jk,
// ordered symmetric, antisymmetric, diagonal.
HermitianBasis gell_mann_basis(int dim);

// Haar-ish random real orthogonal matrix (QR of a Gaussian matrix with the
// sign of diag(R) fixed), deterministic in the seed.
RealMatrix random_orthogonal(int n, std::uint64_t seed);

// F'_j = sum_k O(j,k) F_k. Orthogonal recombination preserves the basis
// invariants.
HermitianBasis rotate_basis(const HermitianBasis& basis,
                            const RealMatrix& rotation);

HermitianBasis random_rotated_basis(int dim, std::uint64_t seed);

// Frobenius residual of sum_k F_k (x) F_k - (swap - identity/d).
double design_identity_residual(const HermitianBasis& basis);

}  // namespace conical

#endif
