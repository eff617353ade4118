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

#ifndef CONICAL_ENTROPY_HPP
#define CONICAL_ENTROPY_HPP

#include <vector>

#include "conical/measurements.hpp"
#include "conical/states.hpp"
#include "conical/types.hpp"

namespace conical {

struct Ensemble {
  std::vector<double> weights;
  std::vector<Matrix> states;
};

// Weights must be nonnegative and sum to 1; members with zero weight may
// hold any valid state.
void validate_ensemble(const Ensemble& ensemble, double tolerance = tol::povm);

Matrix ensemble_average(const Ensemble& ensemble);

// -log2 tr[rho^2] of a single system.
double h2_single(const Matrix& rho);

// rho_B^{-1/4} rho_AB rho_B^{-1/4} with the pseudo-inverse taken on the
// support of the marginal.
Matrix conditioned_state(const BipartiteState& rho);

// Conditional collision entropy H2(A|B) in bits. Evaluated through two
// routes, the defining trace expression with (1 (x) rho_B)^{-1/2} and the
// purity of the conditioned state; they are asserted equal to 1e-9 and the
// conditioned-state value is returned.
double h2_conditional(const BipartiteState& rho);

// H2(X|B Theta) of the state measured by the complete set, evaluated only
// through the closed form
//   -log2[ 1/(d+1) sum_{theta,x} tr( tr_A[P_x^(theta) rho~]^2 ) ]
// so it can be compared against h2_conditional of the flattened assembly
// as an independent cross-check.
double h2_cq_closed_form(const BipartiteState& rho, const MumSet& mums);

// -log2 sum_y p(y) sum_x p(x|y)^2; zero-probability columns are skipped.
double h2_classical_conditional(const JointDistribution& dist);

// M_y = rho_B^{-1/2} (w_y rho_y) rho_B^{-1/2}, completed to a POVM on the
// full space by assigning the off-support projector to outcome 0.
Povm pretty_good_measurement(const Ensemble& ensemble);

// sum_x w_x tr[M_x rho_x] for the pretty-good measurement. The result is
// checked against 2^(-H2(X|B)) of the classical-quantum embedding, which
// it must match to 1e-9.
double pg_guess_probability(const Ensemble& ensemble);

// 2^(-H2(A|B)); how well maximal entanglement with A can be recovered from
// the B side.
double pg_entanglement_fidelity(const BipartiteState& rho);

// sum_x w_x |x><x| (x) rho_x on the split {n, dim_B}.
BipartiteState cq_embed(const Ensemble& ensemble);

}  // namespace conical

#endif
