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

#include "conical/measurements.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "conical/linalg.hpp"

namespace conical {

namespace {

double min_eigenvalue(const Matrix& m) {
  const EigenSystem es = herm_eig(m);
  return es.values(es.values.size() - 1);
}

void check_dim(int dim) {
  if (dim < 2) {
    throw std::invalid_argument("dim must be at least 2");
  }
}

}  // namespace

void validate_povm(const Povm& povm, double tolerance) {
  check_dim(povm.dim);
  if (povm.operators.empty()) {
    throw std::invalid_argument("povm: no operators");
  }
  Matrix sum = Matrix::Zero(povm.dim, povm.dim);
  for (std::size_t x = 0; x < povm.operators.size(); ++x) {
    const Matrix& p = povm.operators[x];
    if (p.rows() != povm.dim || p.cols() != povm.dim) {
      throw std::invalid_argument("povm: operator " + std::to_string(x) +
                                  " has wrong shape");
    }
    if (!is_hermitian(p, tolerance)) {
      throw std::invalid_argument("povm: operator " + std::to_string(x) +
                                  " is not Hermitian");
    }
    const double lam = min_eigenvalue(p);
    if (lam < -tolerance) {
      throw std::invalid_argument("povm: operator " + std::to_string(x) +
                                  " has negative eigenvalue " +
                                  std::to_string(lam));
    }
    sum += p;
  }
  const double defect =
      frobenius_distance(sum, Matrix::Identity(povm.dim, povm.dim));
  if (defect > tolerance) {
    throw std::invalid_argument("povm: completeness defect " +
                                std::to_string(defect));
  }
}

double MumReport::max_deviation() const {
  return std::max({psd_defect, completeness, unit_trace, purity,
                   intra_overlap, cross_overlap, strength});
}

bool MumReport::pass(double tolerance) const {
  return max_deviation() <= tolerance;
}

double SimReport::max_deviation() const {
  return std::max(
      {psd_defect, completeness, outcome_trace, purity, pair_overlap,
       strength});
}

bool SimReport::pass(double tolerance) const {
  return max_deviation() <= tolerance;
}

std::vector<Matrix> mum_generators(const HermitianBasis& basis) {
  const int d = basis.dim;
  check_dim(d);
  const double root = std::sqrt(static_cast<double>(d));
  std::vector<Matrix> gens(static_cast<std::size_t>(d) * (d + 1));
  for (int theta = 0; theta <= d; ++theta) {
    Matrix row_sum = Matrix::Zero(d, d);
    for (int x = 0; x < d - 1; ++x) {
      row_sum += basis.block(x, theta);
    }
    for (int x = 0; x < d - 1; ++x) {
      gens[static_cast<std::size_t>(theta) * d + x] =
          row_sum - (d + root) * basis.block(x, theta);
    }
    gens[static_cast<std::size_t>(theta) * d + d - 1] = (1.0 + root) * row_sum;
  }
  return gens;
}

double mum_max_t(const HermitianBasis& basis) {
  const double inv_d = 1.0 / basis.dim;
  double bound = std::numeric_limits<double>::infinity();
  for (const Matrix& g : mum_generators(basis)) {
    const double lam = min_eigenvalue(g);
    if (lam < 0.0) {
      bound = std::min(bound, inv_d / (-lam));
    }
  }
  if (!std::isfinite(bound)) {
    throw std::logic_error("mum_max_t: no generator with negative spectrum");
  }
  return bound;
}

double kappa_from_t(int dim, double t) {
  check_dim(dim);
  const double root = std::sqrt(static_cast<double>(dim));
  return 1.0 / dim + t * t * (1.0 + root) * (1.0 + root) * (dim - 1);
}

double t_from_kappa(int dim, double kappa) {
  check_dim(dim);
  if (kappa <= 1.0 / dim || kappa > 1.0 + 1e-12) {
    throw std::invalid_argument("t_from_kappa: kappa must lie in (1/d, 1]");
  }
  const double root = std::sqrt(static_cast<double>(dim));
  return std::sqrt((kappa - 1.0 / dim) /
                   ((1.0 + root) * (1.0 + root) * (dim - 1)));
}

double kappa_max(int dim) {
  check_dim(dim);
  return 1.0;
}

MumSet build_mum_set(const HermitianBasis& basis, double t) {
  validate(basis);
  const int d = basis.dim;
  if (!(t > 0.0)) {
    throw std::invalid_argument("build_mum_set: t must be positive");
  }
  const std::vector<Matrix> gens = mum_generators(basis);
  const Matrix pi = Matrix::Identity(d, d) / static_cast<double>(d);

  MumSet set;
  set.dim = d;
  set.t = t;
  set.kappa = kappa_from_t(d, t);
  set.povms.resize(static_cast<std::size_t>(d) + 1);

  double worst = 0.0;
  for (int theta = 0; theta <= d; ++theta) {
    Povm& povm = set.povms[static_cast<std::size_t>(theta)];
    povm.dim = d;
    povm.operators.resize(static_cast<std::size_t>(d));
    for (int x = 0; x < d; ++x) {
      Matrix p = pi + t * gens[static_cast<std::size_t>(theta) * d + x];
      worst = std::min(worst, min_eigenvalue(p));
      povm.operators[static_cast<std::size_t>(x)] = std::move(p);
    }
  }
  if (worst < -tol::povm) {
    throw std::invalid_argument(
        "build_mum_set: t=" + std::to_string(t) +
        " violates positivity, worst eigenvalue " + std::to_string(worst) +
        " (t_max=" + std::to_string(mum_max_t(basis)) + ")");
  }
  const MumReport report = verify_mum(set);
  if (!report.pass()) {
    throw std::logic_error("build_mum_set: constructed set misses the "
                           "defining conditions by " +
                           std::to_string(report.max_deviation()));
  }
  return set;
}

MumSet build_mum_set_max(const HermitianBasis& basis) {
  return build_mum_set(basis, mum_max_t(basis));
}

MumReport verify_mum(const MumSet& set) {
  const int d = set.dim;
  check_dim(d);
  if (set.povms.size() != static_cast<std::size_t>(d) + 1) {
    throw std::invalid_argument("verify_mum: expected d+1 measurements");
  }
  const double intra_target = (1.0 - set.kappa) / (d - 1);
  const Matrix identity = Matrix::Identity(d, d);

  MumReport report;
  report.strength = std::abs(kappa_from_t(d, set.t) - set.kappa);
  for (int theta = 0; theta <= d; ++theta) {
    const Povm& povm = set.povms[static_cast<std::size_t>(theta)];
    if (povm.operators.size() != static_cast<std::size_t>(d)) {
      throw std::invalid_argument("verify_mum: expected d outcomes");
    }
    Matrix sum = Matrix::Zero(d, d);
    for (int x = 0; x < d; ++x) {
      const Matrix& p = povm.operators[static_cast<std::size_t>(x)];
      sum += p;
      report.psd_defect =
          std::max(report.psd_defect, std::max(0.0, -min_eigenvalue(p)));
      report.unit_trace =
          std::max(report.unit_trace, std::abs(p.trace() - Complex(1.0)));
      report.purity = std::max(
          report.purity, std::abs(real_trace_product(p, p) - set.kappa));
      for (int y = 0; y < x; ++y) {
        const double overlap =
            real_trace_product(povm.operators[static_cast<std::size_t>(y)], p);
        report.intra_overlap =
            std::max(report.intra_overlap, std::abs(overlap - intra_target));
      }
    }
    report.completeness =
        std::max(report.completeness, frobenius_distance(sum, identity));
    for (int other = 0; other < theta; ++other) {
      for (const Matrix& p : povm.operators) {
        for (const Matrix& q :
             set.povms[static_cast<std::size_t>(other)].operators) {
          report.cross_overlap =
              std::max(report.cross_overlap,
                       std::abs(real_trace_product(p, q) - 1.0 / d));
        }
      }
    }
  }
  return report;
}

std::vector<Matrix> sim_generators(const HermitianBasis& basis) {
  const int d = basis.dim;
  check_dim(d);
  const int count = d * d;
  Matrix total = Matrix::Zero(d, d);
  for (const Matrix& f : basis.operators) {
    total += f;
  }
  std::vector<Matrix> gens(static_cast<std::size_t>(count));
  const double c = static_cast<double>(d) * (d + 1);
  for (int x = 0; x < count - 1; ++x) {
    gens[static_cast<std::size_t>(x)] =
        total - c * basis.operators[static_cast<std::size_t>(x)];
  }
  gens[static_cast<std::size_t>(count) - 1] = (d + 1.0) * total;
  return gens;
}

double sim_max_t(const HermitianBasis& basis) {
  const double inv = 1.0 / (static_cast<double>(basis.dim) * basis.dim);
  double bound = std::numeric_limits<double>::infinity();
  for (const Matrix& g : sim_generators(basis)) {
    const double lam = min_eigenvalue(g);
    if (lam < 0.0) {
      bound = std::min(bound, inv / (-lam));
    }
  }
  if (!std::isfinite(bound)) {
    throw std::logic_error("sim_max_t: no generator with negative spectrum");
  }
  return bound;
}

double eta_from_t(int dim, double t) {
  check_dim(dim);
  const double d = dim;
  return 1.0 / (d * d * d) + t * t * (d * d - 1.0) * (1.0 + d) * (1.0 + d);
}

double t_from_eta(int dim, double eta) {
  check_dim(dim);
  const double d = dim;
  if (eta <= 1.0 / (d * d * d) || eta > 1.0 / (d * d) + 1e-15) {
    throw std::invalid_argument("t_from_eta: eta must lie in (1/d^3, 1/d^2]");
  }
  return std::sqrt((eta - 1.0 / (d * d * d)) /
                   ((d * d - 1.0) * (1.0 + d) * (1.0 + d)));
}

double sic_t(int dim) {
  check_dim(dim);
  const double d = dim;
  return t_from_eta(dim, 1.0 / (d * d));
}

SimSet build_sim_set(const HermitianBasis& basis, double t) {
  validate(basis);
  const int d = basis.dim;
  if (!(t > 0.0)) {
    throw std::invalid_argument("build_sim_set: t must be positive");
  }
  const std::vector<Matrix> gens = sim_generators(basis);
  const Matrix base = Matrix::Identity(d, d) / (static_cast<double>(d) * d);

  SimSet set;
  set.dim = d;
  set.t = t;
  set.operators.resize(gens.size());
  double worst = 0.0;
  for (std::size_t x = 0; x < gens.size(); ++x) {
    Matrix p = base + t * gens[x];
    worst = std::min(worst, min_eigenvalue(p));
    set.operators[x] = std::move(p);
  }
  if (worst < -tol::povm) {
    throw std::invalid_argument(
        "build_sim_set: t=" + std::to_string(t) +
        " violates positivity, worst eigenvalue " + std::to_string(worst) +
        " (t_max=" + std::to_string(sim_max_t(basis)) + ")");
  }
  set.eta = real_trace_product(set.operators[0], set.operators[0]);
  const SimReport report = verify_sim(set);
  if (!report.pass()) {
    throw std::invalid_argument(
        "build_sim_set: constructed set misses the defining conditions by " +
        std::to_string(report.max_deviation()));
  }
  return set;
}

SimSet build_sim_set_max(const HermitianBasis& basis) {
  return build_sim_set(basis, sim_max_t(basis));
}

SimReport verify_sim(const SimSet& set) {
  const int d = set.dim;
  check_dim(d);
  const int count = d * d;
  if (set.operators.size() != static_cast<std::size_t>(count)) {
    throw std::invalid_argument("verify_sim: expected d^2 operators");
  }
  const double pair_target =
      (1.0 - set.eta * d) / (static_cast<double>(d) * (count - 1));

  SimReport report;
  report.strength = std::abs(eta_from_t(d, set.t) - set.eta);
  Matrix sum = Matrix::Zero(d, d);
  for (int x = 0; x < count; ++x) {
    const Matrix& p = set.operators[static_cast<std::size_t>(x)];
    sum += p;
    report.psd_defect =
        std::max(report.psd_defect, std::max(0.0, -min_eigenvalue(p)));
    report.outcome_trace =
        std::max(report.outcome_trace, std::abs(p.trace() - Complex(1.0 / d)));
    report.purity =
        std::max(report.purity, std::abs(real_trace_product(p, p) - set.eta));
    for (int y = 0; y < x; ++y) {
      const double overlap =
          real_trace_product(set.operators[static_cast<std::size_t>(y)], p);
      report.pair_overlap =
          std::max(report.pair_overlap, std::abs(overlap - pair_target));
    }
  }
  report.completeness = frobenius_distance(sum, Matrix::Identity(d, d));
  return report;
}

namespace {

MumSet wrap_bases_as_mum(int d, const std::vector<Matrix>& bases) {
  MumSet set;
  set.dim = d;
  set.kappa = 1.0;
  set.t = t_from_kappa(d, 1.0);
  set.povms.resize(bases.size());
  for (std::size_t theta = 0; theta < bases.size(); ++theta) {
    Povm& povm = set.povms[theta];
    povm.dim = d;
    povm.operators.resize(static_cast<std::size_t>(d));
    for (int x = 0; x < d; ++x) {
      const Vector v = bases[theta].col(x);
      povm.operators[static_cast<std::size_t>(x)] = v * v.adjoint();
    }
  }
  return set;
}

}  // namespace

MumSet mub_set(int dim) {
  if (dim == 2) {
    const double s = 1.0 / std::sqrt(2.0);
    std::vector<Matrix> bases(3, Matrix(2, 2));
    bases[0] << 1, 0, 0, 1;
    bases[1] << s, s, s, -s;
    bases[2] << s, s, Complex(0, s), Complex(0, -s);
    return wrap_bases_as_mum(2, bases);
  }
  if (dim == 3 || dim == 5) {
    // Odd prime d: computational basis plus the d quadratic Gauss-sum bases
    // with amplitudes omega^(a s^2 + b s)/sqrt(d).
    const int d = dim;
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<Matrix> bases;
    bases.push_back(Matrix::Identity(d, d));
    for (int a = 0; a < d; ++a) {
      Matrix basis(d, d);
      for (int b = 0; b < d; ++b) {
        for (int s = 0; s < d; ++s) {
          const int phase = (a * s * s + b * s) % d;
          const double angle = 2.0 * std::numbers::pi * phase / d;
          basis(s, b) = norm * Complex(std::cos(angle), std::sin(angle));
        }
      }
      bases.push_back(std::move(basis));
    }
    return wrap_bases_as_mum(d, bases);
  }
  throw std::invalid_argument("mub_set: supported dimensions are 2, 3, 5");
}

DesignFit conical_design_fit(const std::vector<Matrix>& operators) {
  if (operators.empty()) {
    throw std::invalid_argument("conical_design_fit: empty operator list");
  }
  const auto n = operators[0].rows();
  if (n < 2) {
    throw std::invalid_argument("conical_design_fit: dim must be at least 2");
  }
  Matrix sum = Matrix::Zero(n * n, n * n);
  for (const Matrix& a : operators) {
    if (a.rows() != n || a.cols() != n) {
      throw std::invalid_argument("conical_design_fit: mixed dimensions");
    }
    sum += kron(a, a);
  }
  const Matrix swap = swap_operator(static_cast<int>(n));
  const double dn = static_cast<double>(n);
  // Gram system for the non-orthogonal pair {identity, swap}:
  // tr[1 1] = n^2, tr[1 F] = tr[F 1] = n, tr[F F] = n^2.
  const double b1 = sum.trace().real();
  const double b2 = real_trace_product(sum, swap);
  const double det = dn * dn * (dn * dn - 1.0);
  DesignFit fit;
  fit.k_plus = (dn * dn * b1 - dn * b2) / det;
  fit.k_minus = (dn * dn * b2 - dn * b1) / det;
  fit.residual = frobenius_distance(
      sum, fit.k_plus * Matrix::Identity(n * n, n * n) + fit.k_minus * swap);
  return fit;
}

double design_f(int dim, double kappa) {
  check_dim(dim);
  return 1.0 + (1.0 - kappa) / (dim - 1);
}

double design_g(int dim, double kappa) {
  check_dim(dim);
  return (kappa * dim - 1.0) / (dim - 1);
}

double design_l(int dim, double eta) {
  check_dim(dim);
  const double d = dim;
  return (1.0 - d * eta) / (d * d - 1.0);
}

double design_r(int dim, double eta) {
  check_dim(dim);
  const double d = dim;
  return (d * d * d * eta - 1.0) / (d * (d * d - 1.0));
}

}  // namespace conical
