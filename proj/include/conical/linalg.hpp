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

#ifndef CONICAL_LINALG_HPP
#define CONICAL_LINALG_HPP

#include "conical/types.hpp"

namespace conical {

enum class Subsystem { A, B };

// Hermitian eigendecomposition, eigenvalues sorted descending. Eigenvector
// phases are fixed so the first significant component is real positive.
struct EigenSystem {
  RealVector values;
  Matrix vectors;  // columns; unitary
};

bool is_hermitian(const Matrix& m, double tolerance = tol::hermitian);

double frobenius_distance(const Matrix& a, const Matrix& b);

// Re tr[a b]; exact for Hermitian pairs, cheaper than forming the product.
double real_trace_product(const Matrix& a, const Matrix& b);

Matrix kron(const Matrix& a, const Matrix& b);

// Trace out one factor of a bipartite operator.
Matrix partial_trace(const Matrix& m, const DimSplit& split, Subsystem keep);

EigenSystem herm_eig(const Matrix& m, double tolerance = tol::hermitian);

// Matrix power of a PSD operator. Eigenvalues at or below
// cutoff * lambda_max are treated as exactly zero; negative powers act as
// the pseudo-inverse on the support. Throws if an eigenvalue is negative
// beyond psd_tolerance * lambda_max.
Matrix psd_power(const Matrix& m, double power,
                 double cutoff = tol::support_cutoff,
                 double psd_tolerance = tol::psd);

// Projector onto the support of a PSD operator (same cutoff convention).
Matrix support_projector(const Matrix& m,
                         double cutoff = tol::support_cutoff,
                         double psd_tolerance = tol::psd);

// Swap operator on two copies of a d-dimensional space: |s,t> -> |t,s>.
Matrix swap_operator(int dim);

// Uhlmann fidelity (tr sqrt(sqrt(sigma) rho sqrt(sigma)))^2 of two states.
double fidelity(const Matrix& rho, const Matrix& sigma);

}  // namespace conical

#endif
