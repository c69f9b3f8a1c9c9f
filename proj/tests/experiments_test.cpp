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

#include "logicalnoise/experiments.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "logicalnoise/errors.hpp"

namespace logicalnoise {
namespace {

std::string first_line(const std::string &text) { return text.substr(0, text.find('\n')); }

TEST(GridTest, Forms) {
    EXPECT_EQ(parse_grid("0.1,0.2, 0.3"), (std::vector<double>{0.1, 0.2, 0.3}));
    auto lin = parse_grid("linspace:0:1:5");
    ASSERT_EQ(lin.size(), 5u);
    EXPECT_DOUBLE_EQ(lin[2], 0.5);
    auto log = parse_grid("logspace:0.01:0.2:10");
    ASSERT_EQ(log.size(), 10u);
    EXPECT_NEAR(log.front(), 0.01, 1e-15);
    EXPECT_NEAR(log.back(), 0.2, 1e-15);
    EXPECT_NEAR(log[1] / log[0], log[9] / log[8], 1e-12);
    EXPECT_EQ(parse_grid("linspace:0.3:0.7:1"), (std::vector<double>{0.3}));
}

TEST(GridTest, Rejections) {
    EXPECT_THROW(parse_grid(""), ValidationError);
    EXPECT_THROW(parse_grid("logspace:0.01:0.2:0"), ValidationError);
    EXPECT_THROW(parse_grid("logspace:0:0.2:3"), ValidationError);
    EXPECT_THROW(parse_grid("0.1,abc"), ValidationError);
    EXPECT_THROW(parse_grid("cubic:1:2:3"), ValidationError);
}

TEST(CodeSpecTest, Expansion) {
    EXPECT_EQ(expand_code_specs({"repetition:3,5,7", "steane"}),
              (std::vector<std::string>{"repetition:3", "repetition:5", "repetition:7", "steane"}));
}

TEST(FamilyTest, Channels) {
    EXPECT_LT((ptm_from_kraus(family_channel("rotation_y", 0.3)).entries() - rotation(Pauli1::Y, 0.3).entries())
                  .cwiseAbs()
                  .maxCoeff(),
              1e-14);
    EXPECT_LT((ptm_from_kraus(family_channel("bit_flip", 0.1)).entries() - bit_flip(0.1).entries()).cwiseAbs().maxCoeff(),
              1e-14);
    EXPECT_THROW(family_channel("teleport", 0.1), ValidationError);
    EXPECT_THROW(family_channel("depolarizing", 3.0), ValidationError);
}

TEST(EffectiveDistanceTest, NoiseAlphabet) {
    EXPECT_EQ(pauli_support(kraus::rotation(Pauli1::X, 0.1)), 0b0010u);
    EXPECT_EQ(pauli_support(kraus::depolarizing(0.1)), 0b1110u);
    EXPECT_EQ(pauli_support(kraus::amplitude_damping(0.1)), 0b1110u);
    StabilizerCode rep = repetition_code(5);
    EXPECT_EQ(effective_distance(rep, pauli_support(kraus::rotation(Pauli1::X, 0.1))), 5u);
    EXPECT_EQ(effective_distance(rep, pauli_support(kraus::dephasing(0.1))), 1u);
    // No logical error is reachable with identity noise.
    EXPECT_EQ(effective_distance(rep, pauli_support(kraus::identity())), rep.d());
    EXPECT_EQ(effective_distance(steane_code(), 0b1110u), 3u);
}

TEST(SlopeTest, LeastSquares) {
    std::vector<double> x{1e-3, 1e-2, 1e-1}, y;
    for (double v : x) y.push_back(7 * std::pow(v, 2.5));
    EXPECT_NEAR(loglog_slope(x, y), 2.5, 1e-12);
    EXPECT_TRUE(std::isnan(loglog_slope({1.0}, {2.0})));
    EXPECT_TRUE(std::isnan(loglog_slope({1.0, 2.0}, {0.0, 0.0})));
}

TEST(LogicalReportTest, RepetitionRotation) {
    StabilizerCode code = repetition_code(3);
    LogicalResult res = run_logical(code, KrausNoiseModel::iid(3, kraus::rotation(Pauli1::X, 0.2)), std::nullopt, true);
    const Json &j = res.report;
    ASSERT_EQ(j["syndromes"].size(), 4u);
    double total = 0.0;
    for (const auto &s : j["syndromes"]) total += s["probability"].get<double>();
    EXPECT_NEAR(total, 1.0, 1e-12);
    EXPECT_NEAR(j["probability_sum"].get<double>(), 1.0, 1e-12);
    ASSERT_TRUE(res.max_deviation.has_value());
    EXPECT_LT(*res.max_deviation, kVerifyTolerance);
    EXPECT_TRUE(res.verification_passed);
    EXPECT_TRUE(j["verification"]["passed"].get<bool>());
    EXPECT_EQ(j["recovery"], "none");
}

TEST(LogicalReportTest, IdentityNoiseIsTrivial) {
    StabilizerCode code = five_qubit_code();
    LogicalResult res = run_logical(code, KrausNoiseModel::iid(5, kraus::identity()), RecoveryTable::min_weight(code), false);
    EXPECT_EQ(res.report["average"]["metrics"]["logical_infidelity"].get<double>(), 0.0);
    EXPECT_EQ(res.report["syndromes"][0]["probability"].get<double>(), 1.0);
    EXPECT_FALSE(res.max_deviation.has_value());
}

TEST(LogicalReportTest, VerifyFiveQubit) {
    StabilizerCode code = five_qubit_code();
    KrausNoiseModel noise = KrausNoiseModel::iid(5, kraus::rotation(Eigen::Vector3d(0.6, 0.0, 0.8), 0.3));
    LogicalResult res = run_logical(code, noise, RecoveryTable::min_weight(code), true, 2);
    ASSERT_TRUE(res.max_deviation.has_value());
    EXPECT_LT(*res.max_deviation, kVerifyTolerance);
}

TEST(SweepTest, CsvLayoutAndDeterminism) {
    SweepConfig config;
    config.codes = {"repetition:3", "repetition:5"};
    config.family = "rotation_x";
    config.grid = parse_grid("logspace:0.02:0.1:4");
    config.metrics = {"logical_infidelity", "logical_max_offdiag"};
    config.jobs = 3;
    SweepResult a = run_sweep(config);
    config.jobs = 1;
    SweepResult b = run_sweep(config);
    std::ostringstream csv_a, csv_b;
    write_sweep_csv(csv_a, a);
    write_sweep_csv(csv_b, b);
    EXPECT_EQ(csv_a.str(), csv_b.str());
    EXPECT_EQ(first_line(csv_a.str()), "kind,code,effective_distance,parameter,r,logical_infidelity,logical_max_offdiag");
    ASSERT_EQ(a.points.size(), 8u);
    ASSERT_EQ(a.fits.size(), 2u);
    EXPECT_EQ(a.points[4].code, "repetition:5");
    EXPECT_EQ(a.points[4].effective_distance, 5u);
    EXPECT_NEAR(a.fits[0].slopes.at("logical_infidelity"), 2.0, 0.2);
    EXPECT_NEAR(a.fits[1].slopes.at("logical_infidelity"), 3.0, 0.3);
}

TEST(SweepTest, PauliFamilyHasNoOffDiagonal) {
    SweepConfig config;
    config.codes = {"repetition:3", "five_qubit"};
    config.family = "bit_flip";
    config.grid = parse_grid("logspace:0.001:0.1:5");
    config.verify = true;
    SweepResult res = run_sweep(config);
    for (const auto &p : res.points) {
        EXPECT_LT(p.values.at("logical_max_offdiag"), 1e-12);
        EXPECT_LT(p.values.at("syndrome_avg_max_offdiag"), 1e-12);
    }
    EXPECT_LT(res.max_deviation, kVerifyTolerance);
    std::ostringstream csv;
    write_sweep_csv(csv, res);
    EXPECT_NE(first_line(csv.str()).find(",max_deviation"), std::string::npos);
}

TEST(SweepTest, Rejections) {
    SweepConfig config;
    config.codes = {"repetition:3"};
    config.family = "rotation_x";
    EXPECT_THROW(run_sweep(config), ValidationError);
    config.grid = {0.1};
    config.metrics = {"bogus"};
    EXPECT_THROW(run_sweep(config), ValidationError);
}

TEST(RoundsReportTest, FirstRowAndDiagonalNoise) {
    StabilizerCode code = repetition_code(3);
    RoundsResult res = run_rounds(code, KrausNoiseModel::iid(3, kraus::bit_flip(0.01)), RecoveryTable::min_weight(code),
                                  {1, 10, 100});
    for (const auto &row : res.rows) {
        EXPECT_EQ(row.second_order_coherent, 0.0);
        if (row.h == 1) {
            EXPECT_NEAR(row.exact, 1.0 - res.error(row.index, row.index), 1e-15);
        }
    }
    std::ostringstream csv;
    write_rounds_csv(csv, res);
    EXPECT_EQ(first_line(csv.str()),
              "h,index,exact,one_minus_exact,first_order,second_order_pauli,second_order_coherent");
    Json summary = rounds_summary(res);
    EXPECT_TRUE(summary["h_coherent"].is_null());
    EXPECT_NEAR(summary["r"].get<double>(), 0.01 * 2 / 3, 1e-15);
}

TEST(RoundsReportTest, RotationCrossover) {
    StabilizerCode code = repetition_code(3);
    const double r = 1e-3;
    KrausNoiseModel noise = KrausNoiseModel::iid(3, kraus::rotation(Pauli1::X, std::acos(1 - 3 * r)));
    RoundsResult res = run_rounds(code, noise, RecoveryTable::min_weight(code), {1, 1000});
    EXPECT_NEAR(res.r, r, 1e-15);
    EXPECT_GT(res.crossover.h_coherent, 0.2 / r);
    EXPECT_LT(res.crossover.h_coherent, 5 / r);
}

TEST(FuzzTest, Deterministic) {
    FuzzReport a = fuzz_lemma1(200, 99);
    FuzzReport b = fuzz_lemma1(200, 99);
    EXPECT_EQ(a.min_slack, b.min_slack);
    EXPECT_EQ(a.total_violations(), 0);
    EXPECT_EQ(fuzz_report_to_json(fuzz_lemma1(1, 5)).dump(), fuzz_report_to_json(fuzz_lemma1(1, 5)).dump());
    EXPECT_NE(fuzz_lemma1(1, 5).min_slack, fuzz_lemma1(1, 6).min_slack);
    EXPECT_THROW(fuzz_lemma1(0, 1), ValidationError);
}

TEST(FuzzTest, IdentityChannelsHaveSlackEqualToBound) {
    Lemma1Report lr = check_lemma1(identity_channel());
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) EXPECT_EQ(lr.slack[a][b], lr.bound[a][b]);
    FuzzReport report = lemma1_report({kraus::identity(), kraus::identity()});
    for (double s : report.min_slack) EXPECT_EQ(s, 0.0);
    EXPECT_EQ(report.total_violations(), 0);
}

}  // namespace
}  // namespace logicalnoise
