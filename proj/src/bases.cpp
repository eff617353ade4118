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

#include "conical/bases.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "conical/linalg.hpp"

namespace conical {

int grid_flat_index(int dim, int x, int theta) {
  if (x < 0 || x >= dim - 1 || theta < 0 || theta > dim) {
    throw std::invalid_argument("grid_flat_index: coordinates out of range");
  }
  return theta * (dim - 1) + x;
}

std::pair<int, int> grid_coords(int dim, int k) {
  if (k < 0 || k >= dim * dim - 1) {
    throw std::invalid_argument("grid_coords: index out of range");
  }
  return {k % (dim - 1), k / (dim - 1)};
}

const Matrix& HermitianBasis::block(int x, int theta) const {
  return operators.at(static_cast<std::size_t>(grid_flat_index(dim, x, theta)));
}

void validate(const HermitianBasis& basis, double tolerance) {
  const int d = basis.dim;
  if (d < 2) {
    throw std::invalid_argument("basis: dim must be at least 2");
  }
  const auto expected = static_cast<std::size_t>(d) * d - 1;
  if (basis.operators.size() != expected) {
    throw std::invalid_argument("basis: expected " + std::to_string(expected) +
                                " operators, got " +
                                std::to_string(basis.operators.size()));
  }
  for (std::size_t j = 0; j < basis.operators.size(); ++j) {
    const Matrix& f = basis.operators[j];
    if (f.rows() != d || f.cols() != d) {
      throw std::invalid_argument("basis: operator " + std::to_string(j) +
                                  " has wrong shape");
    }
    if (!is_hermitian(f, tolerance)) {
      throw std::invalid_argument("basis: operator " + std::to_string(j) +
                                  " is not Hermitian");
    }
    if (std::abs(f.trace()) > tolerance) {
      throw std::invalid_argument("basis: operator " + std::to_string(j) +
                                  " is not traceless");
    }
    for (std::size_t k = 0; k <= j; ++k) {
      const double overlap = real_trace_product(basis.operators[k], f);
      const double target = (j == k) ? 1.0 : 0.0;
      if (std::abs(overlap - target) > tolerance) {
        throw std::invalid_argument(
            "basis: operators " + std::to_string(k) + "," + std::to_string(j) +
            " violate orthonormality by " +
            std::to_string(std::abs(overlap - target)));
      }
    }
  }
}

HermitianBasis gell_mann_basis(int dim) {
  if (dim < 2) {
    throw std::invalid_argument("gell_mann_basis: dim must be at least 2");
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  HermitianBasis basis;
  basis.dim = dim;
  basis.operators.reserve(static_cast<std::size_t>(dim) * dim - 1);
  for (int k = 0; k < dim; ++k) {
    for (int j = 0; j < k; ++j) {
      Matrix f = Matrix::Zero(dim, dim);
      f(j, k) = inv_sqrt2;
      f(k, j) = inv_sqrt2;
      basis.operators.push_back(std::move(f));
    }
  }
  for (int k = 0; k < dim; ++k) {
    for (int j = 0; j < k; ++j) {
      Matrix f = Matrix::Zero(dim, dim);
      f(j, k) = Complex(0.0, -inv_sqrt2);
      f(k, j) = Complex(0.0, inv_sqrt2);
      basis.operators.push_back(std::move(f));
    }
  }
  for (int l = 1; l < dim; ++l) {
    Matrix f = Matrix::Zero(dim, dim);
    const double scale = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (int j = 0; j < l; ++j) {
      f(j, j) = scale;
    }
    f(l, l) = -static_cast<double>(l) * scale;
    basis.operators.push_back(std::move(f));
  }
  return basis;
}

RealMatrix random_orthogonal(int n, std::uint64_t seed) {
  if (n < 1) {
    throw std::invalid_argument("random_orthogonal: n must be positive");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  RealMatrix g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      g(i, j) = gauss(rng);
    }
  }
  Eigen::HouseholderQR<RealMatrix> qr(g);
  RealMatrix q = qr.householderQ();
  const RealMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    if (r(j, j) < 0.0) {
      q.col(j) *= -1.0;
    }
  }
  return q;
}

HermitianBasis rotate_basis(const HermitianBasis& basis,
                            const RealMatrix& rotation) {
  const auto n = static_cast<Eigen::Index>(basis.operators.size());
  if (rotation.rows() != n || rotation.cols() != n) {
    throw std::invalid_argument("rotate_basis: rotation has wrong shape");
  }
  HermitianBasis out;
  out.dim = basis.dim;
  out.operators.resize(basis.operators.size());
  for (Eigen::Index j = 0; j < n; ++j) {
    Matrix f = Matrix::Zero(basis.dim, basis.dim);
    for (Eigen::Index k = 0; k < n; ++k) {
      f += rotation(j, k) * basis.operators[static_cast<std::size_t>(k)];
    }
    out.operators[static_cast<std::size_t>(j)] = std::move(f);
  }
  return out;
}

HermitianBasis random_rotated_basis(int dim, std::uint64_t seed) {
  const HermitianBasis base = gell_mann_basis(dim);
  const RealMatrix rotation = random_orthogonal(dim * dim - 1, seed);
  return rotate_basis(base, rotation);
}

double design_identity_residual(const HermitianBasis& basis) {
  const int d = basis.dim;
  Matrix sum = Matrix::Zero(d * d, d * d);
  for (const Matrix& f : basis.operators) {
    sum += kron(f, f);
  }
  const Matrix target =
      swap_operator(d) - Matrix::Identity(d * d, d * d) / static_cast<double>(d);
  return frobenius_distance(sum, target);
}

}  // namespace conical
