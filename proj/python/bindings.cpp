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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <vector>

#include "conical/bases.hpp"
#include "conical/entropy.hpp"
#include "conical/linalg.hpp"
#include "conical/measurements.hpp"
#include "conical/optimizer.hpp"
#include "conical/relations.hpp"
#include "conical/states.hpp"

namespace py = pybind11;

namespace conical {
namespace {

BipartiteState make_state(int dim_a, int dim_b, const Matrix& matrix) {
  BipartiteState rho{{dim_a, dim_b}, matrix};
  validate_state(rho);
  return rho;
}

py::dict report_dict(const RelationReport& r) {
  py::dict d;
  d["name"] = r.name;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["gap"] = r.gap;
  d["pass"] = r.pass;
  d["tolerance"] = r.tolerance;
  py::dict ctx;
  for (const auto& [key, value] : r.context) {
    ctx[py::str(key)] = value;
  }
  d["context"] = ctx;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "mutually unbiased and symmetric measurement constructions with "
            "collision-entropy uncertainty and entanglement checks";

  py::class_<HermitianBasis>(m, "HermitianBasis")
      .def_readonly("dim", &HermitianBasis::dim)
      .def_readonly("operators", &HermitianBasis::operators);

  py::class_<Povm>(m, "Povm")
      .def_readonly("dim", &Povm::dim)
      .def_readonly("operators", &Povm::operators);

  py::class_<MumSet>(m, "MumSet")
      .def_readonly("dim", &MumSet::dim)
      .def_readonly("t", &MumSet::t)
      .def_readonly("kappa", &MumSet::kappa)
      .def_readonly("povms", &MumSet::povms);

  py::class_<SimSet>(m, "SimSet")
      .def_readonly("dim", &SimSet::dim)
      .def_readonly("t", &SimSet::t)
      .def_readonly("eta", &SimSet::eta)
      .def_readonly("operators", &SimSet::operators);

  py::class_<BipartiteState>(m, "BipartiteState")
      .def(py::init(&make_state), py::arg("dim_a"), py::arg("dim_b"),
           py::arg("matrix"))
      .def_property_readonly(
          "dim_a", [](const BipartiteState& s) { return s.split.dim_a; })
      .def_property_readonly(
          "dim_b", [](const BipartiteState& s) { return s.split.dim_b; })
      .def_readonly("matrix", &BipartiteState::matrix);

  m.def("gell_mann_basis", &gell_mann_basis, py::arg("dim"));
  m.def("random_rotated_basis", &random_rotated_basis, py::arg("dim"),
        py::arg("seed"));
  m.def("design_identity_residual", &design_identity_residual,
        py::arg("basis"));

  m.def("build_mum_set", &build_mum_set, py::arg("basis"), py::arg("t"));
  m.def("build_mum_set_max", &build_mum_set_max, py::arg("basis"));
  m.def("mum_max_t", &mum_max_t, py::arg("basis"));
  m.def("t_from_kappa", &t_from_kappa, py::arg("dim"), py::arg("kappa"));
  m.def("kappa_from_t", &kappa_from_t, py::arg("dim"), py::arg("t"));
  m.def("mum_deviation",
        [](const MumSet& set) { return verify_mum(set).max_deviation(); },
        py::arg("mums"));
  m.def("mub_set", &mub_set, py::arg("dim"));

  m.def("build_sim_set", &build_sim_set, py::arg("basis"), py::arg("t"));
  m.def("build_sim_set_max", &build_sim_set_max, py::arg("basis"));
  m.def("sim_max_t", &sim_max_t, py::arg("basis"));
  m.def("t_from_eta", &t_from_eta, py::arg("dim"), py::arg("eta"));
  m.def("eta_from_t", &eta_from_t, py::arg("dim"), py::arg("t"));
  m.def("sic_t", &sic_t, py::arg("dim"));
  m.def("sim_deviation",
        [](const SimSet& set) { return verify_sim(set).max_deviation(); },
        py::arg("sim"));

  m.def(
      "conical_design_fit",
      [](const std::vector<Matrix>& ops) {
        const DesignFit fit = conical_design_fit(ops);
        return py::make_tuple(fit.k_plus, fit.k_minus, fit.residual);
      },
      py::arg("operators"),
      "Least-squares weights (k_plus, k_minus, residual) of sum A (x) A on "
      "identity and swap");

  m.def("random_density",
        py::overload_cast<int, int, std::uint64_t>(&random_density),
        py::arg("dim"), py::arg("rank"), py::arg("seed"));
  m.def("max_entangled", &max_entangled, py::arg("dim"));
  m.def("separable_sample",
        [](int dim_a, int dim_b, std::uint64_t seed) {
          return separable_sample({dim_a, dim_b}, seed);
        },
        py::arg("dim_a"), py::arg("dim_b"), py::arg("seed"));

  m.def("h2_single", &h2_single, py::arg("rho"));
  m.def("h2_conditional", &h2_conditional, py::arg("state"));
  m.def(
      "h2_classical_conditional",
      [](const RealMatrix& p) { return h2_classical_conditional({p}); },
      py::arg("joint"),
      "Conditional collision entropy of a joint distribution p[x, y]");

  m.def(
      "mum_uncertainty_equality",
      [](const BipartiteState& rho, const MumSet& mums, double tolerance) {
        return report_dict(mum_uncertainty_equality(rho, mums, tolerance));
      },
      py::arg("state"), py::arg("mums"), py::arg("tolerance") = tol::relation);
  m.def(
      "pg_guessing_sum",
      [](const BipartiteState& rho, const MumSet& mums, double tolerance) {
        return report_dict(pg_guessing_sum(rho, mums, tolerance));
      },
      py::arg("state"), py::arg("mums"), py::arg("tolerance") = tol::relation);
  m.def(
      "entropy_sum_bound",
      [](const BipartiteState& rho, const MumSet& mums, double tolerance) {
        return report_dict(entropy_sum_bound(rho, mums, tolerance));
      },
      py::arg("state"), py::arg("mums"), py::arg("tolerance") = 1e-9);
  m.def(
      "sim_uncertainty_equality",
      [](const BipartiteState& rho, const SimSet& sim, double tolerance) {
        return report_dict(sim_uncertainty_equality(rho, sim, tolerance));
      },
      py::arg("state"), py::arg("sim"), py::arg("tolerance") = tol::relation);

  m.def("witness_threshold", &witness_threshold, py::arg("dim"),
        py::arg("kappa"));
  m.def("sim_witness_threshold", &sim_witness_threshold, py::arg("dim"),
        py::arg("eta"));
  m.def(
      "detect_entanglement",
      [](const BipartiteState& rho, const MumSet& mums, double tolerance) {
        const RelationReport r =
            mum_witness_state(rho, mums, transposed_bob_povms(mums),
                              tolerance);
        py::dict d = report_dict(r);
        d["entangled"] = !r.pass;
        return d;
      },
      py::arg("state"), py::arg("mums"), py::arg("tolerance") = 1e-9,
      "Witness verdict with the transposed measurements on B");
  m.def(
      "optimize_detection",
      [](const BipartiteState& rho, const MumSet& mums, int restarts,
         int max_iters, std::uint64_t seed) {
        OptimizerConfig cfg;
        cfg.restarts = restarts;
        cfg.max_iters = max_iters;
        cfg.seed = seed;
        const OptimizeResult result = optimize_bob(rho, mums, cfg);
        py::dict d = report_dict(result.report);
        d["entangled"] = !result.report.pass;
        d["unitaries"] = result.strategy.unitaries;
        return d;
      },
      py::arg("state"), py::arg("mums"), py::arg("restarts") = 8,
      py::arg("max_iters") = 200, py::arg("seed") = 0,
      "Locally optimized witness verdict over projective strategies on B");

  m.attr("__version__") = CONICAL_LAB_VERSION;
}

}  // namespace conical
