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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "logicalnoise/channels.hpp"
#include "logicalnoise/io.hpp"
#include "logicalnoise/logical_channel.hpp"
#include "logicalnoise/oracle.hpp"
#include "logicalnoise/stabilizer_code.hpp"

namespace logicalnoise {

/// Deviation allowed between the factorized path and the dense oracle.
inline constexpr double kVerifyTolerance = 1e-10;

/// "none", "minweight" or "@table.json"; nullopt means no recovery.
std::optional<RecoveryTable> parse_recovery(std::string_view spec, const StabilizerCode &code);

/// Bit mask of the Paulis (bit 1 = X, 2 = Y, 3 = Z) with a nonzero
/// coefficient in some Kraus operator of `kraus`.
unsigned pauli_support(const KrausSet &kraus, double tolerance = 1e-12);

/// Minimum weight of a logically nontrivial, undetectable Pauli built from
/// the letters the noise can produce. Falls back to the code's distance when
/// the noise cannot cause a logical error.
std::size_t effective_distance(const StabilizerCode &code, unsigned support);

/// Syndromes below this probability are compared through p(s) N(s) only:
/// the dense oracle's absolute rounding error, divided by p(s), swamps the
/// normalized entries.
inline constexpr double kNormalizedCompareFloor = 1e-4;

/// Max absolute deviation between `fast` and the dense oracle over p(s), the
/// unnormalized entries p(s) N(s), and the normalized entries of syndromes
/// with p(s) >= normalized_floor on both sides.
double oracle_deviation(const std::vector<SyndromeChannel> &fast, const std::vector<OracleChannel> &oracle,
                        double normalized_floor = kNormalizedCompareFloor);
double verify_against_oracle(const StabilizerCode &code, const KrausNoiseModel &noise,
                             const std::vector<SyndromeChannel> &fast);

struct LogicalResult {
    Json report;
    std::optional<double> max_deviation;
    bool verification_passed = true;
};

/// Per-syndrome and averaged report for one code and noise model. With
/// `verify` and n within dense_qubit_cap() the unrecovered channels are
/// checked against the dense oracle.
LogicalResult run_logical(const StabilizerCode &code, const KrausNoiseModel &noise,
                          const std::optional<RecoveryTable> &recovery, bool verify, unsigned jobs = 1);

/// Comma list ("0.1,0.2"), "logspace:a:b:N" or "linspace:a:b:N".
/// Throws ValidationError on an empty or malformed grid.
std::vector<double> parse_grid(std::string_view spec);

/// Builtin code specs with size lists expanded: "repetition:3,5,7" gives
/// three specs.
std::vector<std::string> expand_code_specs(const std::vector<std::string> &specs);

/// rotation_x | rotation_y | rotation_z (parameter = angle),
/// depolarizing | dephasing | bit_flip (parameter = p),
/// amplitude_damping (parameter = gamma).
KrausSet family_channel(std::string_view family, double parameter);

/// Sweep metric columns in output order.
const std::vector<std::string> &sweep_metric_names();

struct SweepConfig {
    std::vector<std::string> codes;
    std::string family;
    std::vector<double> grid;
    bool recovery = true;
    /// Subset of sweep_metric_names(); empty selects all.
    std::vector<std::string> metrics;
    bool verify = false;
    unsigned jobs = 1;
};

struct SweepPoint {
    std::string code;
    std::size_t effective_distance = 0;
    double parameter = 0.0;
    double r = 0.0;
    std::map<std::string, double> values;
    std::optional<double> max_deviation;
};

struct SweepFit {
    std::string code;
    std::size_t effective_distance = 0;
    /// Log-log least-squares slope against r per metric; NaN with fewer than
    /// two positive points.
    std::map<std::string, double> slopes;
};

struct SweepResult {
    std::vector<std::string> metrics;
    bool verify = false;
    std::vector<SweepPoint> points;
    std::vector<SweepFit> fits;
    double max_deviation = 0.0;
};

/// Grid points are evaluated on `jobs` worker threads and collected in grid
/// order (codes outer, parameters inner).
SweepResult run_sweep(const SweepConfig &config);

/// Header: kind,code,effective_distance,parameter,r,<metrics>[,max_deviation].
/// "point" rows follow, then one "fit" row per code holding the slopes.
void write_sweep_csv(std::ostream &out, const SweepResult &result);

/// Least-squares slope of log(y) against log(x) over points with x, y > 0.
double loglog_slope(const std::vector<double> &x, const std::vector<double> &y);

struct RoundsRow {
    long h = 1;
    std::size_t index = 0;
    double exact = 0.0;  // ((I - E)^h)_{ss}
    double first_order = 0.0;
    double second_order_pauli = 0.0;
    double second_order_coherent = 0.0;
};

struct RoundsResult {
    /// Largest physical single-qubit infidelity in the noise model.
    double r = 0.0;
    double r_prime = 0.0;
    double logical_infidelity = 0.0;
    Eigen::MatrixXd error;
    CrossoverEstimates crossover;
    std::vector<RoundsRow> rows;
};

RoundsResult run_rounds(const StabilizerCode &code, const KrausNoiseModel &noise,
                        const std::optional<RecoveryTable> &recovery, const std::vector<long> &rounds,
                        unsigned jobs = 1);

/// Header: h,index,exact,one_minus_exact,first_order,second_order_pauli,second_order_coherent.
void write_rounds_csv(std::ostream &out, const RoundsResult &result);
Json rounds_summary(const RoundsResult &result);

struct FuzzReport {
    std::size_t count = 0;
    std::uint64_t seed = 0;
    std::array<double, 4> min_slack{};
    std::array<long, 4> violations{};
    double max_r = 0.0;

    long total_violations() const { return violations[0] + violations[1] + violations[2] + violations[3]; }
};

/// The four error-matrix bounds (check_lemma1) over `count` channels from random_channel(Rng(seed)).
FuzzReport fuzz_lemma1(std::size_t count, std::uint64_t seed);
/// The same report over an explicit channel list.
FuzzReport lemma1_report(const std::vector<KrausSet> &channels);
Json fuzz_report_to_json(const FuzzReport &report);

}  // namespace logicalnoise
