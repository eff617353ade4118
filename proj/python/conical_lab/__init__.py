# Copyright 2026 The conical-lab developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Mutually unbiased and symmetric measurement constructions with
collision-entropy uncertainty relations and entanglement detection."""

from conical_lab._core import (  # noqa: F401
    BipartiteState,
    HermitianBasis,
    MumSet,
    Povm,
    SimSet,
    __version__,
    build_mum_set,
    build_mum_set_max,
    build_sim_set,
    build_sim_set_max,
    conical_design_fit,
    design_identity_residual,
    detect_entanglement,
    entropy_sum_bound,
    eta_from_t,
    gell_mann_basis,
    h2_classical_conditional,
    h2_conditional,
    h2_single,
    kappa_from_t,
    max_entangled,
    mub_set,
    mum_deviation,
    mum_max_t,
    mum_uncertainty_equality,
    optimize_detection,
    pg_guessing_sum,
    random_density,
    random_rotated_basis,
    separable_sample,
    sic_t,
    sim_deviation,
    sim_max_t,
    sim_uncertainty_equality,
    sim_witness_threshold,
    t_from_eta,
    t_from_kappa,
    witness_threshold,
)

__all__ = [name for name in dir() if not name.startswith("_")]
