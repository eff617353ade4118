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

#include "conical/entropy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "conical/linalg.hpp"

namespace conical {

void validate_ensemble(const Ensemble& ensemble, double tolerance) {
  if (ensemble.weights.empty() ||
      ensemble.weights.size() != ensemble.states.size()) {
    throw std::invalid_argument("ensemble: weight/state count mismatch");
  }
  const auto n = ensemble.states[0].rows();
  double total = 0.0;
  for (std::size_t x = 0; x < ensemble.weights.size(); ++x) {
    if (ensemble.weights[x] < -tolerance) {
      throw std::invalid_argument("ensemble: negative weight");
    }
    total += ensemble.weights[x];
    const Matrix& rho = ensemble.states[x];
    if (rho.rows() != n || rho.cols() != n) {
      throw std::invalid_argument("ensemble: mixed dimensions");
    }
    if (std::abs(rho.trace() - Complex(1.0)) > tolerance) {
      throw std::invalid_argument("ensemble: member " + std::to_string(x) +
                                  " is not unit trace");
    }
  }
  if (std::abs(total - 1.0) > tolerance) {
    throw std::invalid_argument("ensemble: weights sum to " +
                                std::to_string(total));
  }
}

Matrix ensemble_average(const Ensemble& ensemble) {
  const auto n = ensemble.states.at(0).rows();
  Matrix avg = Matrix::Zero(n, n);
  for (std::size_t x = 0; x < ensemble.states.size(); ++x) {
    avg += ensemble.weights[x] * ensemble.states[x];
  }
  return avg;
}

double h2_single(const Matrix& rho) {
  return -std::log2(real_trace_product(rho, rho));
}

Matrix conditioned_state(const BipartiteState& rho) {
  const Matrix rho_b = partial_trace(rho.matrix, rho.split, Subsystem::B);
  const Matrix q = kron(Matrix::Identity(rho.split.dim_a, rho.split.dim_a),
                        psd_power(rho_b, -0.25));
  return q * rho.matrix * q;
}

double h2_conditional(const BipartiteState& rho) {
  const int n = rho.split.total();
  if (rho.matrix.rows() != n || rho.matrix.cols() != n) {
    throw std::invalid_argument("h2_conditional: matrix does not match split");
  }
  const Matrix tilde = conditioned_state(rho);
  const double via_tilde = -std::log2(real_trace_product(tilde, tilde));

  const Matrix rho_b = partial_trace(rho.matrix, rho.split, Subsystem::B);
  const Matrix s = kron(Matrix::Identity(rho.split.dim_a, rho.split.dim_a),
                        psd_power(rho_b, -0.5));
  const Matrix prod = rho.matrix * s;
  const double via_definition = -std::log2(real_trace_product(prod, prod));

  if (std::abs(via_tilde - via_definition) > 1e-9) {
    throw std::logic_error(
        "h2_conditional: evaluation routes disagree by " +
        std::to_string(std::abs(via_tilde - via_definition)) + " bits");
  }
  return via_tilde;
}

double h2_cq_closed_form(const BipartiteState& rho, const MumSet& mums) {
  if (mums.dim != rho.split.dim_a) {
    throw std::invalid_argument(
        "h2_cq_closed_form: measurement dim does not match system A");
  }
  const int d = mums.dim;
  const int db = rho.split.dim_b;
  const Matrix tilde = conditioned_state(rho);
  const Matrix identity = Matrix::Identity(db, db);
  double total = 0.0;
  for (int theta = 0; theta <= d; ++theta) {
    for (int x = 0; x < d; ++x) {
      const Matrix block =
          partial_trace(kron(mums.op(x, theta), identity) * tilde, rho.split,
                        Subsystem::B);
      total += real_trace_product(block, block);
    }
  }
  return std::log2(d + 1.0) - std::log2(total);
}

double h2_classical_conditional(const JointDistribution& dist) {
  double total = 0.0;
  for (Eigen::Index y = 0; y < dist.p.cols(); ++y) {
    const double py = dist.p.col(y).sum();
    if (py <= 1e-15) {
      continue;
    }
    total += dist.p.col(y).squaredNorm() / py;
  }
  return -std::log2(total);
}

Povm pretty_good_measurement(const Ensemble& ensemble) {
  validate_ensemble(ensemble);
  const Matrix rho_b = ensemble_average(ensemble);
  const Matrix s = psd_power(rho_b, -0.5);
  Povm povm;
  povm.dim = static_cast<int>(rho_b.rows());
  povm.operators.reserve(ensemble.states.size());
  for (std::size_t x = 0; x < ensemble.states.size(); ++x) {
    povm.operators.push_back(s * (ensemble.weights[x] * ensemble.states[x]) *
                             s);
  }
  povm.operators[0] +=
      Matrix::Identity(povm.dim, povm.dim) - support_projector(rho_b);
  return povm;
}

double pg_guess_probability(const Ensemble& ensemble) {
  const Povm povm = pretty_good_measurement(ensemble);
  double prob = 0.0;
  for (std::size_t x = 0; x < ensemble.states.size(); ++x) {
    prob +=
        ensemble.weights[x] * real_trace_product(povm.operators[x],
                                                 ensemble.states[x]);
  }
  const double via_entropy = std::exp2(-h2_conditional(cq_embed(ensemble)));
  if (std::abs(prob - via_entropy) > 1e-9) {
    throw std::logic_error(
        "pg_guess_probability: Born sum and 2^(-H2) disagree by " +
        std::to_string(std::abs(prob - via_entropy)));
  }
  return prob;
}

double pg_entanglement_fidelity(const BipartiteState& rho) {
  return std::exp2(-h2_conditional(rho));
}

BipartiteState cq_embed(const Ensemble& ensemble) {
  const int count = static_cast<int>(ensemble.states.size());
  const int db = static_cast<int>(ensemble.states.at(0).rows());
  Matrix out = Matrix::Zero(count * db, count * db);
  for (int x = 0; x < count; ++x) {
    out.block(x * db, x * db, db, db) =
        ensemble.weights[static_cast<std::size_t>(x)] *
        ensemble.states[static_cast<std::size_t>(x)];
  }
  return {{count, db}, out};
}

}  // namespace conical
