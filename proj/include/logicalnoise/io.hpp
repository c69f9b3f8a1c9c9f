// Copyright 2026 The logicalnoise Authors
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

#include <string>
#include <string_view>

#include <Eigen/Dense>
#include <json.hpp>

#include "logicalnoise/channels.hpp"
#include "logicalnoise/logical_channel.hpp"
#include "logicalnoise/oracle.hpp"
#include "logicalnoise/stabilizer_code.hpp"

namespace logicalnoise {

using Json = nlohmann::ordered_json;

/// Inline JSON, "@path" for a file, or a bare word such as "identity" which
/// is read as {"type": word}.
Json parse_json_argument(std::string_view text);

/// {"n", "k", "d", "generators", "logical_x", "logical_z", optional "name"};
/// every code invariant is validated.
StabilizerCode code_from_json(const Json &j);
Json code_to_json(const StabilizerCode &code);
/// Builtin name ("repetition:5", "steane", ...) or "@file.json".
StabilizerCode load_code(std::string_view spec);

/// Single-qubit channel spec:
///   {"type": "identity"}
///   {"type": "depolarizing" | "dephasing" | "bit_flip", "p": ...}
///   {"type": "pauli", "px": ..., "py": ..., "pz": ...}
///   {"type": "amplitude_damping", "gamma": ...}
///   {"type": "rotation", "axis": "X" | [x, y, z], "angle": radians}
///      ("infidelity": r may replace "angle"; the angle is then acos(1 - 3r))
///   {"type": "unitary", "matrix": [[u00, u01], [u10, u11]]}
///   {"type": "kraus", "operators": [[[..],[..]], ...]}
///   {"type": "ptm", "matrix": 4x4 real}
///   {"type": "compose", "channels": [...]}        (applied in list order)
///   {"type": "mixture", "weights": [...], "channels": [...]}
/// A bare string is shorthand for {"type": string}. Complex entries are
/// numbers or [re, im].
KrausSet channel_from_json(const Json &j);

/// A channel spec (applied to every qubit), {"per_qubit": [spec, ...]}, or
/// {"terms": [{"weight": w, "channel": spec | "per_qubit": [...]}, ...]}.
KrausNoiseModel noise_from_json(const Json &j, std::size_t num_qubits);

/// {"<syndrome bits>": "<Pauli>", ...} with bit j of the key at character j.
RecoveryTable recovery_from_json(const Json &j, const StabilizerCode &code);

Json matrix_to_json(const Eigen::MatrixXd &m);
Json metrics_to_json(const CoherenceMetrics &m);
/// {syndrome, probability, degenerate, ptm (row-major), metrics}.
Json syndrome_channel_to_json(const SyndromeChannel &sc);

/// Shortest round-trip decimal representation of a double.
std::string format_double(double value);

}  // namespace logicalnoise
