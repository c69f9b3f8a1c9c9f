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

#include "logicalnoise/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "logicalnoise/errors.hpp"

namespace logicalnoise {

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file \"" + path + "\"");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

const Json &field(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ValidationError(std::string("missing field \"") + key + "\" in " + j.dump());
    }
    return j.at(key);
}

double number(const Json &j, const char *key) {
    const Json &v = field(j, key);
    if (!v.is_number()) throw ValidationError(std::string("field \"") + key + "\" must be a number");
    return v.get<double>();
}

std::complex<double> complex_value(const Json &v) {
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        return {v[0].get<double>(), v[1].get<double>()};
    }
    throw ValidationError("expected a number or [re, im], got " + v.dump());
}

Eigen::MatrixXcd complex_matrix(const Json &v, Eigen::Index dim) {
    if (!v.is_array() || static_cast<Eigen::Index>(v.size()) != dim) {
        throw ValidationError("expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
    }
    Eigen::MatrixXcd m(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        const Json &row = v[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
            throw ValidationError("matrix rows must have " + std::to_string(dim) + " entries");
        }
        for (Eigen::Index c = 0; c < dim; ++c) m(r, c) = complex_value(row[static_cast<std::size_t>(c)]);
    }
    return m;
}

std::vector<PauliOperator> pauli_list(const Json &j, const char *key) {
    const Json &v = field(j, key);
    if (!v.is_array()) throw ValidationError(std::string("field \"") + key + "\" must be an array of Pauli strings");
    std::vector<PauliOperator> out;
    for (const auto &s : v) {
        if (!s.is_string()) throw ValidationError(std::string("entries of \"") + key + "\" must be strings");
        out.push_back(PauliOperator::from_string(s.get<std::string>()));
    }
    return out;
}

std::size_t count(const Json &j, const char *key) {
    const Json &v = field(j, key);
    if (!v.is_number_unsigned()) throw ValidationError(std::string("field \"") + key + "\" must be a nonnegative integer");
    return v.get<std::size_t>();
}

Eigen::Vector3d axis_vector(const Json &axis) {
    if (axis.is_string()) {
        const auto s = axis.get<std::string>();
        if (s == "X") return {1, 0, 0};
        if (s == "Y") return {0, 1, 0};
        if (s == "Z") return {0, 0, 1};
        throw ValidationError("rotation axis must be X, Y, Z or a unit 3-vector");
    }
    if (axis.is_array() && axis.size() == 3) {
        return {axis[0].get<double>(), axis[1].get<double>(), axis[2].get<double>()};
    }
    throw ValidationError("rotation axis must be X, Y, Z or a unit 3-vector");
}

std::vector<KrausSet> channel_list(const Json &j) {
    const Json &v = field(j, "channels");
    if (!v.is_array() || v.empty()) throw ValidationError("\"channels\" must be a non-empty array");
    std::vector<KrausSet> out;
    for (const auto &c : v) out.push_back(channel_from_json(c));
    return out;
}

}  // namespace

Json parse_json_argument(std::string_view text) {
    std::string body;
    if (text.starts_with("@")) {
        body = read_file(std::string(text.substr(1)));
    } else {
        body = std::string(text);
    }
    auto first = body.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (body[first] == '{' || body[first] == '[')) {
        try {
            return Json::parse(body);
        } catch (const Json::parse_error &e) {
            throw ValidationError(std::string("invalid JSON: ") + e.what());
        }
    }
    Json j;
    j["type"] = body;
    return j;
}

StabilizerCode code_from_json(const Json &j) {
    std::string name = j.contains("name") ? j.at("name").get<std::string>() : std::string("custom");
    StabilizerCode code(name, count(j, "n"), count(j, "k"), count(j, "d"), pauli_list(j, "generators"),
                        pauli_list(j, "logical_x"), pauli_list(j, "logical_z"));
    std::optional<std::size_t> actual;
    try {
        actual = verify_distance(code);
    } catch (const ResourceError &) {
        // Too large to brute force; the claimed distance is kept.
    }
    if (actual && *actual != code.d()) {
        throw ValidationError("code " + name + " claims distance " + std::to_string(code.d()) + " but has distance " +
                              std::to_string(*actual));
    }
    return code;
}

Json code_to_json(const StabilizerCode &code) {
    auto strings = [](const std::vector<PauliOperator> &ops) {
        Json a = Json::array();
        for (const auto &p : ops) a.push_back(p.str());
        return a;
    };
    Json j;
    j["name"] = code.name();
    j["n"] = code.n();
    j["k"] = code.k();
    j["d"] = code.d();
    j["generators"] = strings(code.generators());
    j["logical_x"] = strings(code.logical_x());
    j["logical_z"] = strings(code.logical_z());
    return j;
}

StabilizerCode load_code(std::string_view spec) {
    if (spec.starts_with("@")) return code_from_json(parse_json_argument(spec));
    return builtin_code(spec);
}

KrausSet channel_from_json(const Json &j) {
    if (j.is_string()) return channel_from_json(Json{{"type", j}});
    const Json &type_field = field(j, "type");
    if (!type_field.is_string()) throw ValidationError("channel \"type\" must be a string");
    const std::string type = type_field.get<std::string>();
    if (type == "identity") return kraus::identity();
    if (type == "depolarizing") return kraus::depolarizing(number(j, "p"));
    if (type == "dephasing") return kraus::dephasing(number(j, "p"));
    if (type == "bit_flip") return kraus::bit_flip(number(j, "p"));
    if (type == "pauli") return kraus::pauli_channel(number(j, "px"), number(j, "py"), number(j, "pz"));
    if (type == "amplitude_damping") return kraus::amplitude_damping(number(j, "gamma"));
    if (type == "rotation") {
        Eigen::Vector3d axis = axis_vector(field(j, "axis"));
        double angle;
        if (j.contains("angle")) {
            angle = number(j, "angle");
        } else {
            double r = number(j, "infidelity");
            if (!(r >= 0.0 && r <= 2.0 / 3.0)) throw ValidationError("rotation infidelity must lie in [0, 2/3]");
            angle = std::acos(1.0 - 3.0 * r);
        }
        return kraus::rotation(axis, angle);
    }
    if (type == "unitary") return kraus::unitary(complex_matrix(field(j, "matrix"), 2));
    if (type == "kraus") {
        const Json &ops = field(j, "operators");
        if (!ops.is_array() || ops.empty()) throw ValidationError("\"operators\" must be a non-empty array");
        std::vector<Eigen::MatrixXcd> mats;
        for (const auto &op : ops) mats.push_back(complex_matrix(op, 2));
        return KrausSet(std::move(mats));
    }
    if (type == "ptm") {
        Eigen::MatrixXcd m = complex_matrix(field(j, "matrix"), 4);
        if (m.imag().cwiseAbs().maxCoeff() != 0.0) throw ValidationError("PTM entries must be real");
        ProcessMatrix1Q ptm(Eigen::Matrix4d(m.real()));
        validate_cptp(ptm);
        return kraus_from_ptm(ptm);
    }
    if (type == "compose") return kraus::compose(channel_list(j));
    if (type == "mixture") {
        const Json &w = field(j, "weights");
        if (!w.is_array()) throw ValidationError("\"weights\" must be an array");
        std::vector<double> weights;
        for (const auto &x : w) weights.push_back(x.get<double>());
        return kraus::mixture(weights, channel_list(j));
    }
    throw ValidationError("unknown channel type \"" + type + "\"");
}

namespace {

std::vector<KrausSet> factors_from_json(const Json &j, std::size_t num_qubits) {
    if (j.contains("per_qubit")) {
        const Json &list = j.at("per_qubit");
        if (!list.is_array() || list.size() != num_qubits) {
            throw DimensionError("\"per_qubit\" must list exactly " + std::to_string(num_qubits) + " channels");
        }
        std::vector<KrausSet> out;
        for (const auto &c : list) out.push_back(channel_from_json(c));
        return out;
    }
    const Json &spec = j.contains("channel") ? j.at("channel") : j;
    return std::vector<KrausSet>(num_qubits, channel_from_json(spec));
}

}  // namespace

KrausNoiseModel noise_from_json(const Json &j, std::size_t num_qubits) {
    KrausNoiseModel model;
    if (j.is_object() && j.contains("terms")) {
        const Json &terms = j.at("terms");
        if (!terms.is_array() || terms.empty()) throw ValidationError("\"terms\" must be a non-empty array");
        double total = 0.0;
        for (const auto &t : terms) {
            double w = number(t, "weight");
            if (!(w >= 0.0)) throw ValidationError("noise term weights must be nonnegative");
            total += w;
            model.terms.push_back({w, factors_from_json(t, num_qubits)});
        }
        if (std::abs(total - 1.0) > 1e-12) throw ValidationError("noise term weights must sum to 1");
        return model;
    }
    model.terms.push_back({1.0, factors_from_json(j, num_qubits)});
    return model;
}

RecoveryTable recovery_from_json(const Json &j, const StabilizerCode &code) {
    if (!j.is_object()) throw ValidationError("recovery table must be a JSON object");
    std::map<std::uint64_t, PauliOperator> entries;
    for (const auto &[key, value] : j.items()) {
        Syndrome s = Syndrome::from_string(key);
        if (s.length() != code.num_checks()) {
            throw DimensionError("recovery key \"" + key + "\" must have " + std::to_string(code.num_checks()) + " bits");
        }
        if (!value.is_string()) throw ValidationError("recovery values must be Pauli strings");
        auto [it, inserted] = entries.emplace(s.bits(), PauliOperator::from_string(value.get<std::string>()));
        if (!inserted) throw ValidationError("duplicate recovery entry for syndrome " + key);
    }
    return RecoveryTable::from_entries(code, entries);
}

Json matrix_to_json(const Eigen::MatrixXd &m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json metrics_to_json(const CoherenceMetrics &m) {
    Json j;
    j["logical_infidelity"] = m.logical_infidelity;
    j["max_offdiag"] = m.max_offdiag;
    j["offdiag_frobenius"] = m.offdiag_frobenius;
    j["diag_ratio"] = m.diag_ratio;
    return j;
}

Json syndrome_channel_to_json(const SyndromeChannel &sc) {
    Json j;
    j["syndrome"] = sc.syndrome.str();
    j["probability"] = sc.probability;
    j["degenerate"] = sc.degenerate;
    j["ptm"] = matrix_to_json(sc.ptm);
    if (sc.degenerate) {
        j["metrics"] = nullptr;
    } else {
        j["metrics"] = metrics_to_json(coherence_metrics_from_error(sc.error_matrix()));
    }
    return j;
}

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) return std::to_string(value);
    return std::string(buf, ptr);
}

}  // namespace logicalnoise
