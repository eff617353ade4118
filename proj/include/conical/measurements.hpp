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

#ifndef CONICAL_MEASUREMENTS_HPP
#define CONICAL_MEASUREMENTS_HPP

#include <vector>

#include "conical/bases.hpp"
#include "conical/types.hpp"

namespace conical {

struct Povm {
  int dim = 0;
  std::vector<Matrix> operators;
};

// Throws std::invalid_argument on non-Hermitian or non-PSD elements or a
// completeness defect beyond tolerance.
void validate_povm(const Povm& povm, double tolerance = tol::povm);

// Complete set of d+1 mutually unbiased measurements, d outcomes each.
// Elements have unit trace, purity tr[P^2] = kappa, intra-measurement
// overlap (1-kappa)/(d-1) and cross-measurement overlap 1/d.
struct MumSet {
  int dim = 0;
  double t = 0.0;
  double kappa = 0.0;
  std::vector<Povm> povms;

  const Matrix& op(int x, int theta) const {
    return povms.at(static_cast<std::size_t>(theta))
        .operators.at(static_cast<std::size_t>(x));
  }
};

// Symmetric informationally complete measurement: d^2 outcomes of trace 1/d,
// uniform purity tr[P^2] = eta, uniform pairwise overlaps.
struct SimSet {
  int dim = 0;
  double t = 0.0;
  double eta = 0.0;
  std::vector<Matrix> operators;
};

// Least-squares fit of sum_x A_x (x) A_x onto span{identity, swap}.
struct DesignFit {
  double k_plus = 0.0;
  double k_minus = 0.0;
  double residual = 0.0;
};

struct MumReport {
  double psd_defect = 0.0;        // largest negative eigenvalue magnitude
  double completeness = 0.0;      // max_theta |sum_x P - 1|_F
  double unit_trace = 0.0;        // max |tr P - 1|
  double purity = 0.0;            // max |tr P^2 - kappa|
  double intra_overlap = 0.0;     // max |tr P P' - (1-kappa)/(d-1)|, same theta
  double cross_overlap = 0.0;     // max |tr P P' - 1/d|, different theta
  double strength = 0.0;          // |kappa(t) - kappa|, stored-field agreement

  double max_deviation() const;
  bool pass(double tolerance = tol::povm) const;
};

struct SimReport {
  double psd_defect = 0.0;
  double completeness = 0.0;      // |sum_x P - 1|_F
  double outcome_trace = 0.0;     // max |tr P - 1/d|
  double purity = 0.0;            // max |tr P^2 - eta|
  double pair_overlap = 0.0;      // max |tr P_x P_y - (1-eta d)/(d(d^2-1))|
  double strength = 0.0;          // |eta(t) - eta|, stored-field agreement

  double max_deviation() const;
  bool pass(double tolerance = tol::povm) const;
};

// The d(d+1) traceless generators, theta-major: index theta*d + x.
// F_x^(theta) = F^(theta) - (d+sqrt(d)) F_{x,theta} for x < d-1 and
// F_{d-1}^(theta) = (1+sqrt(d)) F^(theta), with F^(theta) the row sum of the
// basis grid. Each row of generators sums to zero.
std::vector<Matrix> mum_generators(const HermitianBasis& basis);

// Largest t keeping every 1/d + t F_x^(theta) positive semidefinite.
double mum_max_t(const HermitianBasis& basis);

double kappa_from_t(int dim, double t);
double t_from_kappa(int dim, double kappa);  // positive root; throws if
                                             // kappa outside (1/d, 1]
double kappa_max(int dim);                   // = 1, rank-one ceiling

// P_x^(theta) = 1/d + t F_x^(theta). Throws if t violates positivity
// (message carries the worst offending eigenvalue) or if the constructed
// set misses the defining trace conditions.
MumSet build_mum_set(const HermitianBasis& basis, double t);
MumSet build_mum_set_max(const HermitianBasis& basis);

MumReport verify_mum(const MumSet& set);

// The d^2 generators of the SIM family: G_x = G - d(d+1) F_x for
// x < d^2-1 and G_{d^2-1} = (d+1) G, with G the sum of all basis elements.
std::vector<Matrix> sim_generators(const HermitianBasis& basis);

double sim_max_t(const HermitianBasis& basis);

double eta_from_t(int dim, double t);
double t_from_eta(int dim, double eta);  // eta in (1/d^3, 1/d^2]

// t at which the SIM becomes rank-one (a SIC), eta = 1/d^2; only reachable
// when the basis admits it.
double sic_t(int dim);

// P_x = 1/d^2 + t G_x. Verified against the SIM defining conditions before
// returning; eta is measured from the constructed operators.
SimSet build_sim_set(const HermitianBasis& basis, double t);
SimSet build_sim_set_max(const HermitianBasis& basis);

SimReport verify_sim(const SimSet& set);

// Complete MUB set for d in {2, 3, 5} wrapped as rank-one MUMs (kappa = 1).
MumSet mub_set(int dim);

DesignFit conical_design_fit(const std::vector<Matrix>& operators);

// Design coefficients of a complete MUM set: sum P (x) P = f + g * swap.
double design_f(int dim, double kappa);
double design_g(int dim, double kappa);

// Design coefficients of a SIM: sum P (x) P = l + r * swap.
double design_l(int dim, double eta);
double design_r(int dim, double eta);

}  // namespace conical

#endif
