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

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "logicalnoise/errors.hpp"
#include "logicalnoise/random.hpp"

namespace logicalnoise {

namespace {

double parse_number(std::string_view text) {
    std::string s(text);
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(s, &used);
    } catch (const std::exception &) {
        throw ValidationError("invalid number \"" + s + "\"");
    }
    if (used != s.size()) throw ValidationError("invalid number \"" + s + "\"");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

double max_offdiag(const Eigen::MatrixXd &m) {
    double best = 0.0;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (r != c) best = std::max(best, std::abs(m(r, c)));
        }
    }
    return best;
}

template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn &&fn) {
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next.store(count);
                    return;
                }
            }
        });
    }
    for (auto &t : workers) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::optional<RecoveryTable> parse_recovery(std::string_view spec, const StabilizerCode &code) {
    if (spec == "none") return std::nullopt;
    if (spec == "minweight") return RecoveryTable::min_weight(code);
    if (spec.starts_with("@")) return recovery_from_json(parse_json_argument(spec), code);
    throw ValidationError("recovery must be none, minweight or @table.json, got \"" + std::string(spec) + "\"");
}

unsigned pauli_support(const KrausSet &kraus, double tolerance) {
    const auto &paulis = pauli_matrices();
    unsigned mask = 0;
    for (const auto &k : kraus.ops()) {
        for (int p = 1; p < 4; ++p) {
            if (std::abs((paulis[p] * k).trace()) / 2.0 > tolerance) mask |= 1u << p;
        }
    }
    return mask;
}

std::size_t effective_distance(const StabilizerCode &code, unsigned support) {
    auto d = restricted_distance(code, support);
    return d ? *d : code.d();
}

double oracle_deviation(const std::vector<SyndromeChannel> &fast, const std::vector<OracleChannel> &oracle,
                        double normalized_floor) {
    if (fast.size() != oracle.size()) throw DimensionError("syndrome counts differ between fast path and oracle");
    double worst = 0.0;
    for (std::size_t i = 0; i < fast.size(); ++i) {
        worst = std::max(worst, std::abs(fast[i].probability - oracle[i].probability));
        worst = std::max(worst, (fast[i].unnormalized() - oracle[i].unnormalized).cwiseAbs().maxCoeff());
        if (!fast[i].degenerate && !oracle[i].degenerate && fast[i].probability >= normalized_floor &&
            oracle[i].probability >= normalized_floor) {
            worst = std::max(worst, (fast[i].ptm - oracle[i].ptm).cwiseAbs().maxCoeff());
        }
    }
    return worst;
}

double verify_against_oracle(const StabilizerCode &code, const KrausNoiseModel &noise,
                             const std::vector<SyndromeChannel> &fast) {
    DenseOracle oracle(code);
    return oracle_deviation(fast, oracle.all_channels(noise));
}

LogicalResult run_logical(const StabilizerCode &code, const KrausNoiseModel &noise,
                          const std::optional<RecoveryTable> &recovery, bool verify, unsigned jobs) {
    if (noise.num_qubits() != code.n()) {
        throw DimensionError("noise acts on " + std::to_string(noise.num_qubits()) + " qubits, code has " +
                             std::to_string(code.n()));
    }
    const NoiseModel ptm_noise = noise.to_ptm();
    const auto raw = syndrome_distribution(code, ptm_noise, jobs);
    const auto channels = recovery ? apply_recovery(raw, code, *recovery) : raw;

    LogicalResult result;
    Json &report = result.report;
    report["code"] = code_to_json(code);
    report["recovery"] = recovery ? "table" : "none";
    report["physical_max_infidelity"] = ptm_noise.max_infidelity();
    report["physical_r_prime"] = ptm_noise.min_diagonal_error();
    Json records = Json::array();
    double total = 0.0;
    for (const auto &sc : channels) {
        Json rec = syndrome_channel_to_json(sc);
        if (recovery) rec["recovery_operator"] = (*recovery)[sc.syndrome].str();
        records.push_back(std::move(rec));
        total += sc.probability;
    }
    report["syndromes"] = std::move(records);
    report["probability_sum"] = total;
    Json average;
    average["ptm"] = matrix_to_json(average_logical_channel(channels));
    average["metrics"] = metrics_to_json(coherence_metrics_from_error(average_error_matrix(channels)));
    report["average"] = std::move(average);

    if (verify) {
        Json v;
        if (code.n() <= dense_qubit_cap()) {
            double dev = verify_against_oracle(code, noise, raw);
            result.max_deviation = dev;
            result.verification_passed = dev < kVerifyTolerance;
            v["max_deviation"] = dev;
            v["tolerance"] = kVerifyTolerance;
            v["passed"] = result.verification_passed;
        } else {
            v["skipped"] = "n exceeds the dense oracle cap of " + std::to_string(dense_qubit_cap()) + " qubits";
        }
        report["verification"] = std::move(v);
    }
    return result;
}

std::vector<double> parse_grid(std::string_view spec) {
    if (spec.empty()) throw ValidationError("parameter grid is empty");
    std::vector<double> grid;
    if (spec.starts_with("logspace:") || spec.starts_with("linspace:")) {
        auto parts = split(spec, ':');
        if (parts.size() != 4) throw ValidationError("grid must look like logspace:a:b:N");
        double a = parse_number(parts[1]);
        double b = parse_number(parts[2]);
        double nd = parse_number(parts[3]);
        if (nd < 1 || nd != std::floor(nd)) throw ValidationError("grid point count must be a positive integer");
        auto count = static_cast<std::size_t>(nd);
        bool log = spec.starts_with("log");
        if (log && !(a > 0 && b > 0)) throw ValidationError("logspace endpoints must be positive");
        for (std::size_t i = 0; i < count; ++i) {
            double t = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
            grid.push_back(log ? std::exp(std::log(a) + t * (std::log(b) - std::log(a))) : a + t * (b - a));
        }
        if (count > 1) grid.back() = b;
        return grid;
    }
    for (auto part : split(spec, ',')) {
        if (part.empty()) throw ValidationError("empty entry in parameter grid");
        grid.push_back(parse_number(part));
    }
    return grid;
}

std::vector<std::string> expand_code_specs(const std::vector<std::string> &specs) {
    std::vector<std::string> out;
    for (const auto &spec : specs) {
        auto colon = spec.find(':');
        if (spec.starts_with("@") || colon == std::string::npos || spec.find(',') == std::string::npos) {
            out.push_back(spec);
            continue;
        }
        for (auto size : split(std::string_view(spec).substr(colon + 1), ',')) {
            out.push_back(spec.substr(0, colon + 1) + std::string(size));
        }
    }
    if (out.empty()) throw ValidationError("no codes given");
    return out;
}

KrausSet family_channel(std::string_view family, double x) {
    if (family == "rotation_x") return kraus::rotation(Pauli1::X, x);
    if (family == "rotation_y") return kraus::rotation(Pauli1::Y, x);
    if (family == "rotation_z") return kraus::rotation(Pauli1::Z, x);
    if (family == "depolarizing") return kraus::depolarizing(x);
    if (family == "dephasing") return kraus::dephasing(x);
    if (family == "bit_flip") return kraus::bit_flip(x);
    if (family == "amplitude_damping") return kraus::amplitude_damping(x);
    throw ValidationError("unknown noise family \"" + std::string(family) + "\"");
}

const std::vector<std::string> &sweep_metric_names() {
    static const std::vector<std::string> names = {
        "physical_max_offdiag", "physical_ratio",   "logical_infidelity",       "logical_max_offdiag",
        "logical_offdiag_frobenius", "logical_ratio", "syndrome_avg_max_offdiag", "r_prime",
    };
    return names;
}

SweepResult run_sweep(const SweepConfig &config) {
    if (config.grid.empty()) throw ValidationError("parameter grid is empty");
    if (config.codes.empty()) throw ValidationError("no codes given");
    SweepResult result;
    result.verify = config.verify;
    const auto &all = sweep_metric_names();
    if (config.metrics.empty()) {
        result.metrics = all;
    } else {
        for (const auto &name : all) {
            if (std::find(config.metrics.begin(), config.metrics.end(), name) != config.metrics.end()) {
                result.metrics.push_back(name);
            }
        }
        for (const auto &name : config.metrics) {
            if (std::find(all.begin(), all.end(), name) == all.end()) {
                throw ValidationError("unknown metric \"" + name + "\"");
            }
        }
    }

    // Constructing every channel first rejects out-of-range parameters
    // before any work is scheduled.
    std::vector<KrausSet> channels;
    unsigned support = 0;
    for (double x : config.grid) {
        channels.push_back(family_channel(config.family, x));
        support |= pauli_support(channels.back());
    }

    struct CodeContext {
        std::string spec;
        StabilizerCode code;
        std::size_t distance;
        std::optional<RecoveryTable> recovery;
        std::optional<DenseOracle> oracle;
    };
    std::vector<CodeContext> codes;
    for (const auto &spec : expand_code_specs(config.codes)) {
        StabilizerCode code = load_code(spec);
        std::size_t distance = effective_distance(code, support);
        std::optional<RecoveryTable> recovery;
        if (config.recovery) recovery = RecoveryTable::min_weight(code);
        std::optional<DenseOracle> oracle;
        if (config.verify && code.n() <= dense_qubit_cap()) oracle.emplace(code);
        codes.push_back({spec, std::move(code), distance, std::move(recovery), std::move(oracle)});
    }

    const std::size_t per_code = config.grid.size();
    result.points.resize(codes.size() * per_code);
    parallel_for(result.points.size(), config.jobs, [&](std::size_t idx) {
        const CodeContext &ctx = codes[idx / per_code];
        const std::size_t g = idx % per_code;
        const ProcessMatrix1Q ptm = ptm_from_kraus(channels[g]);
        SweepPoint point;
        point.code = ctx.spec;
        point.effective_distance = ctx.distance;
        point.parameter = config.grid[g];
        point.r = infidelity(ptm);

        const Eigen::MatrixXd physical_error = Eigen::Matrix4d::Identity() - ptm.entries();
        const CoherenceMetrics physical = coherence_metrics_from_error(physical_error);
        const auto raw = syndrome_distribution(ctx.code, NoiseModel::iid(ctx.code.n(), ptm), 1);
        double syndrome_avg = 0.0;
        for (const auto &sc : raw) syndrome_avg += max_offdiag(sc.unnormalized());
        const auto recovered = ctx.recovery ? apply_recovery(raw, ctx.code, *ctx.recovery) : raw;
        const CoherenceMetrics logical = coherence_metrics_from_error(average_error_matrix(recovered));

        std::map<std::string, double> values = {
            {"physical_max_offdiag", physical.max_offdiag},
            {"physical_ratio", physical.diag_ratio},
            {"logical_infidelity", logical.logical_infidelity},
            {"logical_max_offdiag", logical.max_offdiag},
            {"logical_offdiag_frobenius", logical.offdiag_frobenius},
            {"logical_ratio", logical.diag_ratio},
            {"syndrome_avg_max_offdiag", syndrome_avg},
            {"r_prime", std::min({std::abs(1.0 - ptm(1, 1)), std::abs(1.0 - ptm(2, 2)), std::abs(1.0 - ptm(3, 3))})},
        };
        for (const auto &name : result.metrics) point.values[name] = values.at(name);
        if (ctx.oracle) {
            point.max_deviation =
                oracle_deviation(raw, ctx.oracle->all_channels(KrausNoiseModel::iid(ctx.code.n(), channels[g])));
        }
        result.points[idx] = std::move(point);
    });

    for (const auto &p : result.points) {
        if (p.max_deviation) result.max_deviation = std::max(result.max_deviation, *p.max_deviation);
    }
    for (std::size_t c = 0; c < codes.size(); ++c) {
        SweepFit fit;
        fit.code = codes[c].spec;
        fit.effective_distance = codes[c].distance;
        std::vector<double> rs;
        for (std::size_t g = 0; g < per_code; ++g) rs.push_back(result.points[c * per_code + g].r);
        for (const auto &name : result.metrics) {
            std::vector<double> ys;
            for (std::size_t g = 0; g < per_code; ++g) ys.push_back(result.points[c * per_code + g].values.at(name));
            fit.slopes[name] = loglog_slope(rs, ys);
        }
        result.fits.push_back(std::move(fit));
    }
    return result;
}

void write_sweep_csv(std::ostream &out, const SweepResult &result) {
    out << "kind,code,effective_distance,parameter,r";
    for (const auto &name : result.metrics) out << ',' << name;
    if (result.verify) out << ",max_deviation";
    out << '\n';
    for (const auto &p : result.points) {
        out << "point," << p.code << ',' << p.effective_distance << ',' << format_double(p.parameter) << ','
            << format_double(p.r);
        for (const auto &name : result.metrics) out << ',' << format_double(p.values.at(name));
        if (result.verify) out << ',' << (p.max_deviation ? format_double(*p.max_deviation) : std::string());
        out << '\n';
    }
    for (const auto &f : result.fits) {
        out << "fit," << f.code << ',' << f.effective_distance << ",,";
        for (const auto &name : result.metrics) out << ',' << format_double(f.slopes.at(name));
        if (result.verify) out << ',';
        out << '\n';
    }
}

double loglog_slope(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size()) throw DimensionError("slope fit needs equally many x and y values");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0 && y[i] > 0.0)) continue;
        double lx = std::log(x[i]);
        double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++count;
    }
    if (count < 2) return std::numeric_limits<double>::quiet_NaN();
    const double nd = static_cast<double>(count);
    const double denom = nd * sxx - sx * sx;
    if (denom == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return (nd * sxy - sx * sy) / denom;
}

RoundsResult run_rounds(const StabilizerCode &code, const KrausNoiseModel &noise,
                        const std::optional<RecoveryTable> &recovery, const std::vector<long> &rounds,
                        unsigned jobs) {
    if (rounds.empty()) throw ValidationError("round grid is empty");
    if (noise.num_qubits() != code.n()) {
        throw DimensionError("noise acts on " + std::to_string(noise.num_qubits()) + " qubits, code has " +
                             std::to_string(code.n()));
    }
    const NoiseModel ptm_noise = noise.to_ptm();
    auto channels = syndrome_distribution(code, ptm_noise, jobs);
    if (recovery) channels = apply_recovery(channels, code, *recovery);

    RoundsResult result;
    result.r = ptm_noise.max_infidelity();
    result.r_prime = ptm_noise.min_diagonal_error();
    const Eigen::MatrixXd signed_error = average_error_matrix(channels);
    result.logical_infidelity = coherence_metrics_from_error(signed_error).logical_infidelity;
    result.error = signed_error.cwiseAbs();
    result.crossover = crossover_estimates(result.error);
    for (long h : rounds) {
        RoundsReport rep = rounds_accumulation(result.error, h);
        for (Eigen::Index s = 1; s < result.error.rows(); ++s) {
            result.rows.push_back({h, static_cast<std::size_t>(s), rep.exact(s, s), rep.first_order(s, s),
                                   rep.second_order_pauli(s), rep.second_order_coherent(s)});
        }
    }
    return result;
}

void write_rounds_csv(std::ostream &out, const RoundsResult &result) {
    out << "h,index,exact,one_minus_exact,first_order,second_order_pauli,second_order_coherent\n";
    for (const auto &row : result.rows) {
        out << row.h << ',' << row.index << ',' << format_double(row.exact) << ',' << format_double(1.0 - row.exact)
            << ',' << format_double(row.first_order) << ',' << format_double(row.second_order_pauli) << ','
            << format_double(row.second_order_coherent) << '\n';
    }
}

Json rounds_summary(const RoundsResult &result) {
    auto finite_or_null = [](double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); };
    Json j;
    j["r"] = result.r;
    j["r_prime"] = result.r_prime;
    j["inverse_r"] = result.r > 0 ? Json(1.0 / result.r) : Json(nullptr);
    j["logical_infidelity"] = result.logical_infidelity;
    j["h_pauli"] = finite_or_null(result.crossover.h_pauli);
    j["h_coherent"] = finite_or_null(result.crossover.h_coherent);
    j["h_crit"] = finite_or_null(result.crossover.h_crit);
    j["coherent_index"] = result.crossover.coherent_index;
    j["error_matrix"] = matrix_to_json(result.error);
    return j;
}

FuzzReport lemma1_report(const std::vector<KrausSet> &channels) {
    FuzzReport report;
    report.count = channels.size();
    report.min_slack.fill(std::numeric_limits<double>::infinity());
    for (const auto &k : channels) {
        Lemma1Report lr = check_lemma1(ptm_from_kraus(k));
        report.max_r = std::max(report.max_r, lr.r);
        for (int b = 0; b < 4; ++b) {
            report.min_slack[b] = std::min(report.min_slack[b], lr.min_slack[b]);
            report.violations[b] += lr.violations[b];
        }
    }
    return report;
}

FuzzReport fuzz_lemma1(std::size_t count, std::uint64_t seed) {
    if (count < 1) throw ValidationError("fuzz count must be >= 1");
    Rng rng(seed);
    FuzzReport report;
    report.count = count;
    report.seed = seed;
    report.min_slack.fill(std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < count; ++i) {
        Lemma1Report lr = check_lemma1(ptm_from_kraus(random_channel(rng)));
        report.max_r = std::max(report.max_r, lr.r);
        for (int b = 0; b < 4; ++b) {
            report.min_slack[b] = std::min(report.min_slack[b], lr.min_slack[b]);
            report.violations[b] += lr.violations[b];
        }
    }
    return report;
}

Json fuzz_report_to_json(const FuzzReport &report) {
    static const char *names[4] = {"trace_preserving", "non_unital", "diagonal", "off_diagonal"};
    Json j;
    j["count"] = report.count;
    j["seed"] = report.seed;
    j["max_r"] = report.max_r;
    Json slack, viol;
    for (int b = 0; b < 4; ++b) {
        slack[names[b]] = report.min_slack[b];
        viol[names[b]] = report.violations[b];
    }
    j["min_slack"] = std::move(slack);
    j["violations"] = std::move(viol);
    j["total_violations"] = report.total_violations();
    j["passed"] = report.total_violations() == 0;
    return j;
}

}  // namespace logicalnoise
