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

#ifndef CONICAL_IO_HPP
#define CONICAL_IO_HPP

#include <string>

#include <json.hpp>

#include "conical/bases.hpp"
#include "conical/measurements.hpp"
#include "conical/optimizer.hpp"
#include "conical/relations.hpp"
#include "conical/states.hpp"

namespace conical {

using Json = nlohmann::json;

// Matrix wire format: {"rows": n, "cols": m, "data": [[re, im], ...]}
// row-major. Doubles are emitted in shortest-round-trip form, which is
// lossless for IEEE-754.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json basis_to_json(const HermitianBasis& basis);
HermitianBasis basis_from_json(const Json& j);

Json mum_to_json(const MumSet& set);
MumSet mum_from_json(const Json& j);

Json sim_to_json(const SimSet& set);
SimSet sim_from_json(const Json& j);

Json state_to_json(const BipartiteState& rho);
BipartiteState state_from_json(const Json& j);

Json distribution_to_json(const JointDistribution& dist);
JointDistribution distribution_from_json(const Json& j);

Json strategy_to_json(const BobStrategy& strategy);
BobStrategy strategy_from_json(const Json& j);

Json report_to_json(const RelationReport& report);
RelationReport report_from_json(const Json& j);

Json load_json(const std::string& path);
void save_json(const std::string& path, const Json& j);

}  // namespace conical

#endif
