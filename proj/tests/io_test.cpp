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

#include <cmath>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "logicalnoise/errors.hpp"

namespace logicalnoise {
namespace {

double max_abs(const Eigen::MatrixXd &m) { return m.cwiseAbs().maxCoeff(); }

Eigen::Matrix4d ptm_of(const Json &spec) { return ptm_from_kraus(channel_from_json(spec)).entries(); }

TEST(JsonArgumentTest, Forms) {
    EXPECT_EQ(parse_json_argument("identity"), Json::parse(R"({"type":"identity"})"));
    EXPECT_EQ(parse_json_argument(R"({"type":"bit_flip","p":0.1})")["p"], 0.1);
    const auto path = std::filesystem::temp_directory_path() / "logicalnoise_io_test.json";
    {
        std::ofstream out(path);
        out << R"({"type":"dephasing","p":0.2})";
    }
    EXPECT_EQ(parse_json_argument("@" + path.string())["type"], "dephasing");
    std::filesystem::remove(path);
    EXPECT_THROW(parse_json_argument("@/nonexistent/nowhere.json"), ValidationError);
    EXPECT_THROW(parse_json_argument("{broken"), ValidationError);
}

TEST(ChannelJsonTest, StandardChannels) {
    EXPECT_LT(max_abs(ptm_of(Json::parse(R"({"type":"identity"})")) - Eigen::Matrix4d::Identity()), 1e-15);
    EXPECT_LT(max_abs(ptm_of(Json::parse(R"({"type":"depolarizing","p":0.3})")) - depolarizing(0.3).entries()), 1e-14);
    EXPECT_LT(max_abs(ptm_of(Json::parse(R"({"type":"pauli","px":0.1,"py":0.02,"pz":0.03})")) -
                      pauli_channel(0.1, 0.02, 0.03).entries()),
              1e-14);
    EXPECT_LT(max_abs(ptm_of(Json::parse(R"({"type":"amplitude_damping","gamma":0.25})")) -
                      amplitude_damping(0.25).entries()),
              1e-14);
    EXPECT_LT(max_abs(ptm_of(Json::parse(R"({"type":"rotation","axis":"X","angle":0.2})")) -
                      rotation(Pauli1::X, 0.2).entries()),
              1e-14);
    EXPECT_LT(max_abs(ptm_of(Json::parse(R"({"type":"rotation","axis":[0,0,1],"angle":0.4})")) -
                      rotation(Pauli1::Z, 0.4).entries()),
              1e-14);
}

TEST(ChannelJsonTest, RotationByInfidelity) {
    Eigen::Matrix4d m = ptm_of(Json::parse(R"({"type":"rotation","axis":"Y","infidelity":1e-3})"));
    EXPECT_NEAR(infidelity(ProcessMatrix1Q(m)), 1e-3, 1e-15);
}

TEST(ChannelJsonTest, MatrixForms) {
    // Hadamard with complex entry syntax.
    const double h = 1 / std::sqrt(2.0);
    Json u = {{"type", "unitary"}, {"matrix", {{h, h}, {Json::array({h, 0.0}), -h}}}};
    Eigen::Matrix4d m = ptm_of(u);
    EXPECT_NEAR(m(1, 3), 1.0, 1e-14);
    EXPECT_NEAR(m(2, 2), -1.0, 1e-14);
    Json ptm = {{"type", "ptm"}, {"matrix", {{1, 0, 0, 0}, {0, 0.8, 0, 0}, {0, 0, 0.8, 0}, {0, 0, 0, 1}}}};
    EXPECT_LT(max_abs(ptm_of(ptm) - dephasing(0.1).entries()), 1e-12);
    Json kraus_spec = Json::parse(R"({"type":"kraus","operators":[[[1,0],[0,0]],[[0,0],[0,1]]]})");
    EXPECT_LT(max_abs(ptm_of(kraus_spec) - dephasing(0.5).entries()), 1e-14);
    Json bad = Json::parse(R"({"type":"kraus","operators":[[[1,0],[0,1]],[[0,1],[0,0]]]})");
    EXPECT_THROW(channel_from_json(bad), ValidationError);
}

TEST(ChannelJsonTest, Combinators) {
    Json compose = Json::parse(R"({"type":"compose","channels":[{"type":"dephasing","p":0.1},{"type":"dephasing","p":0.2}]})");
    EXPECT_NEAR(ptm_of(compose)(1, 1), 0.8 * 0.6, 1e-14);
    Json mix = Json::parse(R"({"type":"mixture","weights":[0.25,0.75],"channels":["identity",{"type":"bit_flip","p":1}]})");
    EXPECT_NEAR(ptm_of(mix)(3, 3), 0.25 - 0.75, 1e-14);
}

TEST(ChannelJsonTest, Rejections) {
    EXPECT_THROW(channel_from_json(Json::parse(R"({"type":"warp"})")), ValidationError);
    EXPECT_THROW(channel_from_json(Json::parse(R"({"type":"depolarizing"})")), ValidationError);
    EXPECT_THROW(channel_from_json(Json::parse(R"({"type":"depolarizing","p":2})")), ValidationError);
    EXPECT_THROW(channel_from_json(Json::parse(R"({"type":"rotation","axis":"W","angle":1})")), ValidationError);
    EXPECT_THROW(channel_from_json(Json::parse(R"({"type":"rotation","axis":[1,1,0],"angle":1})")), ValidationError);
    EXPECT_THROW(channel_from_json(Json::parse(R"({"type":"mixture","weights":[0.5],"channels":["identity","identity"]})")),
                 ValidationError);
}

TEST(NoiseJsonTest, Forms) {
    KrausNoiseModel iid = noise_from_json(Json::parse(R"({"type":"bit_flip","p":0.1})"), 3);
    ASSERT_EQ(iid.terms.size(), 1u);
    EXPECT_EQ(iid.num_qubits(), 3u);
    KrausNoiseModel local = noise_from_json(Json::parse(R"({"per_qubit":["identity",{"type":"bit_flip","p":0.1}]})"), 2);
    EXPECT_EQ(local.terms[0].factors[0].size(), 1u);
    EXPECT_THROW(noise_from_json(Json::parse(R"({"per_qubit":["identity"]})"), 2), DimensionError);
    KrausNoiseModel terms = noise_from_json(
        Json::parse(R"({"terms":[{"weight":0.3,"channel":"identity"},{"weight":0.7,"per_qubit":["identity","identity"]}]})"),
        2);
    EXPECT_EQ(terms.terms.size(), 2u);
    EXPECT_DOUBLE_EQ(terms.terms[1].weight, 0.7);
    EXPECT_THROW(noise_from_json(Json::parse(R"({"terms":[{"weight":0.3,"channel":"identity"}]})"), 2), ValidationError);
}

TEST(CodeJsonTest, RoundTripBuiltins) {
    for (const char *name : {"repetition:3", "repetition:5", "five_qubit", "steane", "trivial"}) {
        StabilizerCode code = load_code(name);
        StabilizerCode again = code_from_json(code_to_json(code));
        EXPECT_EQ(again.n(), code.n());
        EXPECT_EQ(again.d(), code.d());
        EXPECT_EQ(code_to_json(again), code_to_json(code)) << name;
    }
    EXPECT_THROW(load_code("surface:10"), ValidationError);
}

TEST(CodeJsonTest, RejectsInvalid) {
    Json wrong_distance = code_to_json(load_code("repetition:3"));
    wrong_distance["d"] = 2;
    EXPECT_THROW(code_from_json(wrong_distance), ValidationError);
    Json anticommuting = Json::parse(R"({"n":2,"k":1,"d":1,"generators":["XX"],"logical_x":["XI"],"logical_z":["ZI"]})");
    EXPECT_THROW(code_from_json(anticommuting), ValidationError);
}

TEST(RecoveryJsonTest, Table) {
    StabilizerCode code = load_code("repetition:3");
    RecoveryTable table = recovery_from_json(Json::parse(R"({"10":"XII","11":"IXI"})"), code);
    EXPECT_EQ(table[Syndrome::from_string("10")].str(), "+XII");
    EXPECT_EQ(table[Syndrome::from_string("01")], RecoveryTable::min_weight(code)[Syndrome::from_string("01")]);
    EXPECT_THROW(recovery_from_json(Json::parse(R"({"10":"IIX"})"), code), ValidationError);
    EXPECT_THROW(recovery_from_json(Json::parse(R"({"1":"XII"})"), code), DimensionError);
}

TEST(OutputJsonTest, SyndromeRecord) {
    StabilizerCode code = load_code("repetition:3");
    auto channels = syndrome_distribution(code, NoiseModel::iid(3, bit_flip(0.1)));
    Json j = syndrome_channel_to_json(channels[1]);
    EXPECT_EQ(j["syndrome"], Syndrome(2, 1).str());
    EXPECT_EQ(j["ptm"].size(), 4u);
    EXPECT_EQ(j["ptm"][0].size(), 4u);
    EXPECT_FALSE(j["metrics"].is_null());
    auto dead = syndrome_distribution(code, NoiseModel::iid(3, identity_channel()));
    EXPECT_TRUE(syndrome_channel_to_json(dead[1])["metrics"].is_null());
    EXPECT_TRUE(syndrome_channel_to_json(dead[1])["degenerate"].get<bool>());
}

TEST(FormatDoubleTest, RoundTrips) {
    for (double v : {0.1, 1.0 / 3.0, 1e-300, -2.5, 0.0}) EXPECT_EQ(std::stod(format_double(v)), v);
    EXPECT_EQ(format_double(0.5), "0.5");
    EXPECT_EQ(format_double(std::nan("")), "nan");
    EXPECT_EQ(format_double(-INFINITY), "-inf");
}

}  // namespace
}  // namespace logicalnoise
