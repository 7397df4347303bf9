// Copyright 2026 The qecc1wqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <json.hpp>

#include "qecc1wqc/circuit.hpp"

namespace qecc1wqc {

// Wire format:
//   {"n": 3, "ops": [{"g": "H", "t": [0]},
//                    {"g": "RZ", "t": [1], "xi": 0.5},
//                    {"g": "CZ", "t": [0, 1]},
//                    {"m": {"q": 0, "basis": "XY", "xi": 0.5, "slot": 0}},
//                    {"cif": {"slot": 0, "pauli": "+IXZ"}}]}

nlohmann::json circuit_to_json(const Circuit &c);

/// Throws std::invalid_argument on schema violations.
Circuit circuit_from_json(const nlohmann::json &j);

}  // namespace qecc1wqc
