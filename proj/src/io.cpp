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

#include "conical/io.hpp"

#include <fstream>
#include <stdexcept>

namespace conical {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) {
    throw std::invalid_argument("json: " + message);
  }
}

std::vector<Matrix> matrices_from_json(const Json& j) {
  require(j.is_array(), "expected an array of matrices");
  std::vector<Matrix> out;
  out.reserve(j.size());
  for (const Json& item : j) {
    out.push_back(matrix_from_json(item));
  }
  return out;
}

Json matrices_to_json(const std::vector<Matrix>& ms) {
  Json j = Json::array();
  for (const Matrix& m : ms) {
    j.push_back(matrix_to_json(m));
  }
  return j;
}

void require_square_ops(const std::vector<Matrix>& ops, int dim,
                        std::size_t count, const std::string& what) {
  require(dim >= 1, what + " dimension must be positive");
  require(ops.size() == count,
          what + " expects " + std::to_string(count) + " operators, got " +
              std::to_string(ops.size()));
  for (const Matrix& op : ops) {
    require(op.rows() == dim && op.cols() == dim,
            what + " operator shape must be dim x dim");
  }
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json data = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      data.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    }
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

Matrix matrix_from_json(const Json& j) {
  require(j.is_object() && j.contains("rows") && j.contains("cols") &&
              j.contains("data"),
          "matrix needs rows, cols, data");
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const Json& data = j.at("data");
  require(rows >= 0 && cols >= 0, "matrix dimensions must be nonnegative");
  require(data.is_array() &&
              data.size() == static_cast<std::size_t>(rows * cols),
          "matrix data size mismatch");
  Matrix m(rows, cols);
  std::size_t k = 0;
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index jj = 0; jj < cols; ++jj, ++k) {
      const Json& entry = data.at(k);
      require(entry.is_array() && entry.size() == 2,
              "matrix entries are [re, im] pairs");
      m(i, jj) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
  }
  return m;
}

Json basis_to_json(const HermitianBasis& basis) {
  return Json{{"dim", basis.dim},
              {"operators", matrices_to_json(basis.operators)}};
}

HermitianBasis basis_from_json(const Json& j) {
  require(j.is_object() && j.contains("dim") && j.contains("operators"),
          "basis needs dim, operators");
  HermitianBasis basis;
  basis.dim = j.at("dim").get<int>();
  basis.operators = matrices_from_json(j.at("operators"));
  require_square_ops(basis.operators, basis.dim,
                     static_cast<std::size_t>(basis.dim) * basis.dim - 1,
                     "basis");
  return basis;
}

Json mum_to_json(const MumSet& set) {
  Json povms = Json::array();
  for (const Povm& povm : set.povms) {
    povms.push_back(matrices_to_json(povm.operators));
  }
  return Json{{"dim", set.dim},
              {"t", set.t},
              {"kappa", set.kappa},
              {"povms", povms}};
}

MumSet mum_from_json(const Json& j) {
  require(j.is_object() && j.contains("dim") && j.contains("t") &&
              j.contains("kappa") && j.contains("povms"),
          "measurement set needs dim, t, kappa, povms");
  MumSet set;
  set.dim = j.at("dim").get<int>();
  set.t = j.at("t").get<double>();
  set.kappa = j.at("kappa").get<double>();
  const Json& povms = j.at("povms");
  require(povms.is_array() &&
              povms.size() == static_cast<std::size_t>(set.dim) + 1,
          "povms must be an array of d+1 measurements");
  for (const Json& item : povms) {
    Povm povm;
    povm.dim = set.dim;
    povm.operators = matrices_from_json(item);
    require_square_ops(povm.operators, set.dim,
                       static_cast<std::size_t>(set.dim), "measurement");
    set.povms.push_back(std::move(povm));
  }
  return set;
}

Json sim_to_json(const SimSet& set) {
  return Json{{"dim", set.dim},
              {"t", set.t},
              {"eta", set.eta},
              {"operators", matrices_to_json(set.operators)}};
}

SimSet sim_from_json(const Json& j) {
  require(j.is_object() && j.contains("dim") && j.contains("t") &&
              j.contains("eta") && j.contains("operators"),
          "sim needs dim, t, eta, operators");
  SimSet set;
  set.dim = j.at("dim").get<int>();
  set.t = j.at("t").get<double>();
  set.eta = j.at("eta").get<double>();
  set.operators = matrices_from_json(j.at("operators"));
  require_square_ops(set.operators, set.dim,
                     static_cast<std::size_t>(set.dim) * set.dim, "sim");
  return set;
}

Json state_to_json(const BipartiteState& rho) {
  return Json{{"dA", rho.split.dim_a},
              {"dB", rho.split.dim_b},
              {"matrix", matrix_to_json(rho.matrix)}};
}

BipartiteState state_from_json(const Json& j) {
  require(j.is_object() && j.contains("dA") && j.contains("dB") &&
              j.contains("matrix"),
          "state needs dA, dB, matrix");
  BipartiteState rho;
  rho.split.dim_a = j.at("dA").get<int>();
  rho.split.dim_b = j.at("dB").get<int>();
  rho.matrix = matrix_from_json(j.at("matrix"));
  require(rho.matrix.rows() == rho.split.total() &&
              rho.matrix.cols() == rho.split.total(),
          "state matrix does not match the split");
  return rho;
}

Json distribution_to_json(const JointDistribution& dist) {
  Json rows = Json::array();
  for (Eigen::Index x = 0; x < dist.p.rows(); ++x) {
    Json row = Json::array();
    for (Eigen::Index y = 0; y < dist.p.cols(); ++y) {
      row.push_back(dist.p(x, y));
    }
    rows.push_back(std::move(row));
  }
  return Json{{"dX", dist.p.rows()}, {"dY", dist.p.cols()}, {"p", rows}};
}

JointDistribution distribution_from_json(const Json& j) {
  require(j.is_object() && j.contains("dX") && j.contains("dY") &&
              j.contains("p"),
          "distribution needs dX, dY, p");
  const auto rows = j.at("dX").get<Eigen::Index>();
  const auto cols = j.at("dY").get<Eigen::Index>();
  const Json& p = j.at("p");
  require(p.is_array() && p.size() == static_cast<std::size_t>(rows),
          "distribution row count mismatch");
  JointDistribution dist;
  dist.p.resize(rows, cols);
  for (Eigen::Index x = 0; x < rows; ++x) {
    const Json& row = p.at(static_cast<std::size_t>(x));
    require(row.is_array() && row.size() == static_cast<std::size_t>(cols),
            "distribution column count mismatch");
    for (Eigen::Index y = 0; y < cols; ++y) {
      dist.p(x, y) = row.at(static_cast<std::size_t>(y)).get<double>();
    }
  }
  return dist;
}

Json strategy_to_json(const BobStrategy& strategy) {
  const int dim = strategy.unitaries.empty()
                      ? 0
                      : static_cast<int>(strategy.unitaries[0].rows());
  return Json{{"dim", dim}, {"unitaries", matrices_to_json(strategy.unitaries)}};
}

BobStrategy strategy_from_json(const Json& j) {
  require(j.is_object() && j.contains("unitaries"), "strategy needs unitaries");
  BobStrategy strategy;
  strategy.unitaries = matrices_from_json(j.at("unitaries"));
  return strategy;
}

Json report_to_json(const RelationReport& report) {
  return Json{{"name", report.name},
              {"kind", report.kind == RelationKind::equality ? "equality"
                                                             : "inequality"},
              {"lhs", report.lhs},
              {"rhs", report.rhs},
              {"gap", report.gap},
              {"pass", report.pass},
              {"tolerance", report.tolerance},
              {"context", Json(report.context)}};
}

RelationReport report_from_json(const Json& j) {
  require(j.is_object() && j.contains("name") && j.contains("lhs") &&
              j.contains("rhs"),
          "report needs name, lhs, rhs");
  RelationReport report;
  report.name = j.at("name").get<std::string>();
  report.kind = j.value("kind", std::string("equality")) == "inequality"
                    ? RelationKind::inequality
                    : RelationKind::equality;
  report.lhs = j.at("lhs").get<double>();
  report.rhs = j.at("rhs").get<double>();
  report.gap = j.value("gap", report.lhs - report.rhs);
  report.tolerance = j.value("tolerance", 0.0);
  report.pass = j.value("pass", false);
  if (j.contains("context")) {
    for (const auto& [key, value] : j.at("context").items()) {
      report.context[key] = value.get<double>();
    }
  }
  return report;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open " + path);
  }
  Json j;
  in >> j;
  return j;
}

void save_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) {
    throw std::invalid_argument("cannot write " + path);
  }
  out << j.dump(2) << '\n';
}

}  // namespace conical
