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

#include "conical/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace conical {

bool is_hermitian(const Matrix& m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  const double dev = (m - m.adjoint()).norm();
  return dev <= tolerance * std::max(1.0, m.norm());
}

double frobenius_distance(const Matrix& a, const Matrix& b) {
  return (a - b).norm();
}

double real_trace_product(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.cols() || a.cols() != b.rows()) {
    throw std::invalid_argument("real_trace_product: incompatible shapes");
  }
  // tr[a b] = sum_{ik} a(i,k) b(k,i)
  return a.cwiseProduct(b.transpose()).sum().real();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix partial_trace(const Matrix& m, const DimSplit& split, Subsystem keep) {
  const int da = split.dim_a;
  const int db = split.dim_b;
  if (m.rows() != m.cols() || m.rows() != split.total()) {
    throw std::invalid_argument("partial_trace: matrix dimension " +
                                std::to_string(m.rows()) +
                                " does not match split " + std::to_string(da) +
                                "x" + std::to_string(db));
  }
  if (keep == Subsystem::A) {
    Matrix out = Matrix::Zero(da, da);
    for (int a = 0; a < da; ++a)
      for (int ap = 0; ap < da; ++ap)
        for (int b = 0; b < db; ++b)
          out(a, ap) += m(a * db + b, ap * db + b);
    return out;
  }
  Matrix out = Matrix::Zero(db, db);
  for (int b = 0; b < db; ++b)
    for (int bp = 0; bp < db; ++bp)
      for (int a = 0; a < da; ++a)
        out(b, bp) += m(a * db + b, a * db + bp);
  return out;
}

EigenSystem herm_eig(const Matrix& m, double tolerance) {
  if (!is_hermitian(m, tolerance)) {
    throw std::invalid_argument("herm_eig: input is not Hermitian within " +
                                std::to_string(tolerance));
  }
  // Symmetrize to suppress floating-point drift before factorizing.
  const Matrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("herm_eig: eigensolver failed to converge");
  }

  const Eigen::Index n = m.rows();
  EigenSystem out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  // Eigen returns ascending order; flip to descending.
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values(i) = solver.eigenvalues()(n - 1 - i);
    out.vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  // Fix each eigenvector phase: first significant component real positive.
  for (Eigen::Index i = 0; i < n; ++i) {
    const double peak = out.vectors.col(i).cwiseAbs().maxCoeff();
    for (Eigen::Index r = 0; r < n; ++r) {
      const Complex v = out.vectors(r, i);
      if (std::abs(v) > 1e-12 * peak) {
        out.vectors.col(i) *= std::conj(v) / std::abs(v);
        break;
      }
    }
  }
  return out;
}

namespace {

EigenSystem psd_eig(const Matrix& m, double psd_tolerance, const char* who) {
  EigenSystem es = herm_eig(m);
  const double top = es.values.size() > 0 ? es.values(0) : 0.0;
  const double floor = -psd_tolerance * std::max(top, 1e-300);
  const double bottom = es.values(es.values.size() - 1);
  if (bottom < floor) {
    throw std::invalid_argument(std::string(who) +
                                ": eigenvalue " + std::to_string(bottom) +
                                " is negative beyond tolerance");
  }
  return es;
}

}  // namespace

Matrix psd_power(const Matrix& m, double power, double cutoff,
                 double psd_tolerance) {
  EigenSystem es = psd_eig(m, psd_tolerance, "psd_power");
  const double top = es.values(0);
  RealVector powered(es.values.size());
  for (Eigen::Index i = 0; i < es.values.size(); ++i) {
    const double lam = es.values(i);
    if (top <= 0.0 || lam <= cutoff * top) {
      powered(i) = 0.0;
    } else {
      powered(i) = std::pow(lam, power);
    }
  }
  return es.vectors * powered.asDiagonal() * es.vectors.adjoint();
}

Matrix support_projector(const Matrix& m, double cutoff, double psd_tolerance) {
  EigenSystem es = psd_eig(m, psd_tolerance, "support_projector");
  const double top = es.values(0);
  Matrix out = Matrix::Zero(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < es.values.size(); ++i) {
    if (top > 0.0 && es.values(i) > cutoff * top) {
      out += es.vectors.col(i) * es.vectors.col(i).adjoint();
    }
  }
  return out;
}

Matrix swap_operator(int dim) {
  if (dim < 1) throw std::invalid_argument("swap_operator: dim must be >= 1");
  Matrix out = Matrix::Zero(dim * dim, dim * dim);
  for (int s = 0; s < dim; ++s)
    for (int t = 0; t < dim; ++t)
      out(s * dim + t, t * dim + s) = 1.0;
  return out;
}

double fidelity(const Matrix& rho, const Matrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  if (std::abs(rho.trace().real() - 1.0) > 1e-6 ||
      std::abs(sigma.trace().real() - 1.0) > 1e-6) {
    throw std::invalid_argument("fidelity: inputs must have unit trace");
  }
  const Matrix sqrt_sigma = psd_power(sigma, 0.5);
  const Matrix inner = sqrt_sigma * rho * sqrt_sigma;
  EigenSystem es = psd_eig(inner, 1e-8, "fidelity");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < es.values.size(); ++i) {
    sum += std::sqrt(std::max(0.0, es.values(i)));
  }
  return sum * sum;
}

}  // namespace conical
