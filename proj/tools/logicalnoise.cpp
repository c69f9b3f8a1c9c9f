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

// logicalnoise command-line front end.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "logicalnoise/errors.hpp"
#include "logicalnoise/experiments.hpp"
#include "logicalnoise/io.hpp"

namespace ln = logicalnoise;

namespace {

// Writes `fn(stream)` to `path`, or to stdout when `path` is empty.
template <class Fn>
void emit(const std::string &path, Fn &&fn) {
    if (path.empty()) {
        fn(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path);
    if (!out) throw ln::ValidationError("cannot write \"" + path + "\"");
    fn(out);
}

std::vector<long> parse_rounds(const std::string &spec) {
    std::vector<long> rounds;
    for (double h : ln::parse_grid(spec)) {
        if (!(h >= 1.0) || !std::isfinite(h)) throw ln::ValidationError("round counts must be >= 1");
        long v = std::lround(h);
        if (rounds.empty() || rounds.back() != v) rounds.push_back(v);
    }
    return rounds;
}

struct Common {
    std::string code;
    std::string noise;
    std::string recovery = "none";
    std::string out;
    unsigned jobs = 1;
};

int cmd_logical(const Common &c, bool verify) {
    ln::StabilizerCode code = ln::load_code(c.code);
    ln::KrausNoiseModel noise = ln::noise_from_json(ln::parse_json_argument(c.noise), code.n());
    auto recovery = ln::parse_recovery(c.recovery, code);
    ln::LogicalResult result = ln::run_logical(code, noise, recovery, verify, c.jobs);
    emit(c.out, [&](std::ostream &os) { os << result.report.dump(2) << '\n'; });
    if (verify) {
        if (result.max_deviation) {
            std::cerr << "max deviation " << ln::format_double(*result.max_deviation)
                      << (result.verification_passed ? " < " : " >= ") << ln::format_double(ln::kVerifyTolerance)
                      << '\n';
        } else {
            std::cerr << "verification skipped: n = " << code.n() << " exceeds the dense oracle cap of "
                      << ln::dense_qubit_cap() << '\n';
        }
    }
    return result.verification_passed ? 0 : 1;
}

int cmd_sweep(ln::SweepConfig config, const std::string &grid, const std::string &out) {
    config.grid = ln::parse_grid(grid);
    ln::SweepResult result = ln::run_sweep(config);
    emit(out, [&](std::ostream &os) { ln::write_sweep_csv(os, result); });
    for (const auto &fit : result.fits) {
        std::cerr << fit.code << " (effective distance " << fit.effective_distance << ")";
        for (const auto &[name, slope] : fit.slopes) {
            if (name == "logical_max_offdiag" || name == "logical_infidelity" || name == "syndrome_avg_max_offdiag") {
                std::cerr << "  " << name << " slope " << ln::format_double(slope);
            }
        }
        std::cerr << '\n';
    }
    bool ok = true;
    if (config.verify) {
        ok = result.max_deviation < ln::kVerifyTolerance;
        std::cerr << "max deviation " << ln::format_double(result.max_deviation) << (ok ? " < " : " >= ")
                  << ln::format_double(ln::kVerifyTolerance) << '\n';
    }
    return ok ? 0 : 1;
}

int cmd_rounds(const Common &c, const std::string &rounds_spec, const std::string &summary_path) {
    ln::StabilizerCode code = ln::load_code(c.code);
    ln::KrausNoiseModel noise = ln::noise_from_json(ln::parse_json_argument(c.noise), code.n());
    auto recovery = ln::parse_recovery(c.recovery, code);
    ln::RoundsResult result = ln::run_rounds(code, noise, recovery, parse_rounds(rounds_spec), c.jobs);
    emit(c.out, [&](std::ostream &os) { ln::write_rounds_csv(os, result); });
    ln::Json summary = ln::rounds_summary(result);
    if (!summary_path.empty()) {
        emit(summary_path, [&](std::ostream &os) { os << summary.dump(2) << '\n'; });
    }
    std::cerr << "r " << ln::format_double(result.r) << "  h_pauli " << ln::format_double(result.crossover.h_pauli)
              << "  h_coherent " << ln::format_double(result.crossover.h_coherent) << "  h_crit "
              << ln::format_double(result.crossover.h_crit) << '\n';
    return 0;
}

int cmd_fuzz(std::size_t count, std::uint64_t seed, const std::string &channels, const std::string &out) {
    ln::FuzzReport report;
    if (channels.empty()) {
        report = ln::fuzz_lemma1(count, seed);
    } else {
        ln::Json list = ln::parse_json_argument(channels);
        if (!list.is_array() || list.empty()) throw ln::ValidationError("--channels must be a non-empty JSON array");
        std::vector<ln::KrausSet> kraus;
        for (const auto &spec : list) kraus.push_back(ln::channel_from_json(spec));
        report = ln::lemma1_report(kraus);
        report.seed = seed;
    }
    emit(out, [&](std::ostream &os) { os << ln::fuzz_report_to_json(report).dump(2) << '\n'; });
    return report.total_violations() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Effective logical channels of stabilizer codes under local noise"};
    app.require_subcommand(1);

    Common logical_opts;
    bool verify = false;
    auto *logical = app.add_subcommand("logical", "Per-syndrome and averaged logical channels");
    logical->add_option("--code", logical_opts.code, "Builtin code (repetition:N, five_qubit, steane, trivial) or @file.json")
        ->required();
    logical->add_option("--noise", logical_opts.noise, "Noise spec: inline JSON, @file.json or identity")->required();
    logical->add_option("--recovery", logical_opts.recovery, "none, minweight or @table.json")
        ->capture_default_str();
    logical->add_flag("--verify", verify, "Cross-check against the dense oracle");
    logical->add_option("--out", logical_opts.out, "Output JSON path (default stdout)");
    logical->add_option("--jobs", logical_opts.jobs, "Worker threads")->check(CLI::PositiveNumber);

    ln::SweepConfig sweep_config;
    std::vector<std::string> sweep_codes;
    std::string grid, sweep_out, sweep_recovery = "minweight";
    auto *sweep = app.add_subcommand("sweep", "Scaling sweep over a noise parameter grid");
    sweep->add_option("--code", sweep_config.codes, "Code specs; repetition:3,5,7 expands to three codes")->required();
    sweep->add_option("--family", sweep_config.family,
                      "rotation_x|rotation_y|rotation_z|depolarizing|dephasing|bit_flip|amplitude_damping")
        ->required();
    sweep->add_option("--grid", grid, "Parameter grid: a,b,c or logspace:a:b:N or linspace:a:b:N")->required();
    sweep->add_option("--recovery", sweep_recovery, "none or minweight")
        ->check(CLI::IsMember({"none", "minweight"}))
        ->capture_default_str();
    sweep->add_option("--metrics", sweep_config.metrics, "Metric columns (default all)")->delimiter(',');
    sweep->add_flag("--verify", sweep_config.verify, "Cross-check every point against the dense oracle");
    sweep->add_option("--out", sweep_out, "Output CSV path (default stdout)");
    sweep->add_option("--jobs", sweep_config.jobs, "Worker threads")->check(CLI::PositiveNumber);

    Common rounds_opts;
    rounds_opts.recovery = "minweight";
    std::string rounds_spec = "1,10,100,1000,10000", summary_path;
    auto *rounds = app.add_subcommand("rounds", "Accumulation of the logical error over repeated rounds");
    rounds->add_option("--code", rounds_opts.code, "Builtin code or @file.json")->required();
    rounds->add_option("--noise", rounds_opts.noise, "Noise spec: inline JSON, @file.json or identity")->required();
    rounds->add_option("--recovery", rounds_opts.recovery, "none, minweight or @table.json")->capture_default_str();
    rounds->add_option("--rounds", rounds_spec, "Round counts: list or logspace:a:b:N (rounded)")->capture_default_str();
    rounds->add_option("--out", rounds_opts.out, "Output CSV path (default stdout)");
    rounds->add_option("--summary", summary_path, "Write the crossover summary as JSON");
    rounds->add_option("--jobs", rounds_opts.jobs, "Worker threads")->check(CLI::PositiveNumber);

    std::size_t fuzz_count = 100000;
    std::uint64_t seed = 1;
    std::string fuzz_channels, fuzz_out;
    auto *fuzz = app.add_subcommand("fuzz-lemma1", "Check the error-matrix bounds on random CPTP channels");
    fuzz->add_option("--count", fuzz_count, "Number of random channels")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    fuzz->add_option("--seed", seed, "RNG seed")->capture_default_str();
    fuzz->add_option("--channels", fuzz_channels, "JSON array of channel specs to check instead of random ones");
    fuzz->add_option("--out", fuzz_out, "Output JSON path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*logical) return cmd_logical(logical_opts, verify);
        if (*sweep) {
            sweep_config.recovery = sweep_recovery == "minweight";
            return cmd_sweep(sweep_config, grid, sweep_out);
        }
        if (*rounds) return cmd_rounds(rounds_opts, rounds_spec, summary_path);
        if (*fuzz) return cmd_fuzz(fuzz_count, seed, fuzz_channels, fuzz_out);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
