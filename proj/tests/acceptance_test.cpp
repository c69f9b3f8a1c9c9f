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

// Acceptance suite: runs each headline check at full scale and prints one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "logicalnoise/experiments.hpp"
#include "logicalnoise/random.hpp"
#include "test_support.hpp"

namespace logicalnoise {
namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

std::string fmt(const char *format, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, value);
    return buf;
}

void parallel(std::size_t count, const std::function<void(std::size_t)> &body) {
    const unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) body(i);
        });
    }
    for (auto &t : pool) t.join();
}

Outcome oracle_equivalence() {
    constexpr int kModels = 100;
    const std::vector<StabilizerCode> codes = {repetition_code(3), repetition_code(5), five_qubit_code(),
                                               steane_code()};
    struct Job {
        std::size_t code;
        KrausNoiseModel noise;
    };
    std::vector<Job> jobs;
    for (std::size_t c = 0; c < codes.size(); ++c) {
        Rng rng(1000 + c);
        for (int m = 0; m < kModels; ++m) jobs.push_back({c, testing::random_local_noise(rng, codes[c].n())});
    }
    std::vector<DenseOracle> oracles;
    for (const auto &code : codes) oracles.emplace_back(code);
    std::vector<double> deviation(jobs.size());
    parallel(jobs.size(), [&](std::size_t i) {
        const StabilizerCode &code = codes[jobs[i].code];
        deviation[i] = testing::literal_deviation(syndrome_distribution(code, jobs[i].noise.to_ptm()),
                                                  oracles[jobs[i].code].all_channels(jobs[i].noise))
                           .max();
    });
    const double worst = *std::max_element(deviation.begin(), deviation.end());
    return {worst < 1e-10, std::to_string(jobs.size()) + " models, max deviation " + fmt("%.3g", worst) + " (< 1e-10)"};
}

Outcome lemma1_fuzz() {
    FuzzReport report = fuzz_lemma1(100000, 1);
    std::string slack;
    for (double s : report.min_slack) slack += (slack.empty() ? "" : ", ") + fmt("%.3g", s);
    return {report.total_violations() == 0,
            "1e5 channels, " + std::to_string(report.total_violations()) + " violations, min slack [" + slack + "]"};
}

struct SweepChecks {
    Outcome offdiag, infidelity, ratio;
};

SweepChecks rotation_sweep() {
    SweepConfig config;
    config.codes = {"repetition:3,5,7"};
    config.family = "rotation_x";
    config.grid = parse_grid("logspace:0.01:0.2:10");
    config.jobs = std::max(1u, std::thread::hardware_concurrency());
    SweepResult res = run_sweep(config);

    SweepChecks out;
    out.offdiag.passed = out.infidelity.passed = true;
    for (const auto &fit : res.fits) {
        const double d = static_cast<double>(fit.effective_distance);
        const double half = d / 2;
        const double ceil_half = std::ceil(d / 2);
        const double avg = fit.slopes.at("syndrome_avg_max_offdiag");
        const double rec = fit.slopes.at("logical_max_offdiag");
        const double inf = fit.slopes.at("logical_infidelity");
        out.offdiag.passed = out.offdiag.passed && std::abs(avg - half) <= 0.1 * half && std::abs(rec - half) <= 0.1 * half;
        out.infidelity.passed = out.infidelity.passed && std::abs(inf - ceil_half) <= 0.1 * ceil_half;
        out.offdiag.detail += "d=" + std::to_string(fit.effective_distance) + ": " + fmt("%.4f", avg) + "/" +
                              fmt("%.4f", rec) + " vs " + fmt("%.1f", half) + "; ";
        out.infidelity.detail += "d=" + std::to_string(fit.effective_distance) + ": " + fmt("%.4f", inf) + " vs " +
                                 fmt("%.0f", ceil_half) + "; ";
    }
    out.offdiag.detail = "slopes (syndrome-averaged/recovered) " + out.offdiag.detail;
    out.infidelity.detail = "slopes " + out.infidelity.detail;

    bool bounded = true, monotone = true;
    std::size_t compared = 0;
    const std::size_t per_code = config.grid.size();
    for (const auto &p : res.points) {
        bounded = bounded && p.values.at("logical_ratio") <= p.values.at("physical_ratio");
    }
    for (std::size_t g = 0; g < per_code; ++g) {
        if (config.grid[g] > 0.1) continue;
        ++compared;
        for (std::size_t c = 1; c < res.fits.size(); ++c) {
            monotone = monotone && res.points[c * per_code + g].values.at("logical_ratio") <
                                       res.points[(c - 1) * per_code + g].values.at("logical_ratio");
        }
    }
    out.ratio.passed = bounded && monotone && compared > 0;
    out.ratio.detail = std::string("logical <= physical at all ") + std::to_string(res.points.size()) + " points: " +
                       (bounded ? "yes" : "no") + "; decreasing in d at " + std::to_string(compared) +
                       " angles <= 0.1: " + (monotone ? "yes" : "no");
    return out;
}

Outcome pauli_diagonality() {
    const std::vector<StabilizerCode> codes = {repetition_code(3), repetition_code(5), repetition_code(7),
                                               five_qubit_code(),  steane_code(),      trivial_code()};
    Rng rng(6);
    double worst = 0.0;
    for (const auto &code : codes) {
        for (int m = 0; m < 10; ++m) {
            for (const auto &sc : syndrome_distribution(code, testing::random_pauli_noise(rng, code.n()))) {
                worst = std::max(worst, testing::max_offdiagonal(sc.ptm));
            }
        }
    }
    return {worst < 1e-12, "60 models, max off-diagonal " + fmt("%.3g", worst) + " (< 1e-12)"};
}

Outcome rounds_crossover() {
    StabilizerCode code = repetition_code(3);
    bool passed = true;
    std::string detail;
    for (double r : {1e-2, 1e-3}) {
        KrausNoiseModel noise = KrausNoiseModel::iid(3, kraus::rotation(Pauli1::X, std::acos(1 - 3 * r)));
        RoundsResult res = run_rounds(code, noise, RecoveryTable::min_weight(code), {1});
        const double h = res.crossover.h_coherent;
        const double factor = h * r;
        passed = passed && std::isfinite(h) && factor >= 0.2 && factor <= 5.0;
        detail += "r=" + fmt("%g", r) + ": h_c=" + fmt("%g", h) + " (" + fmt("%.2f", factor) + "/r), h_crit=" +
                  fmt("%.3g", res.crossover.h_crit) + "; ";
    }
    return {passed, detail};
}

Outcome structural_invariants() {
    const std::vector<StabilizerCode> codes = {repetition_code(3), repetition_code(5), repetition_code(7),
                                               five_qubit_code(),  steane_code(),      trivial_code()};
    Rng rng(8);
    double projector = 0.0, orthonormal = 0.0, probability = 0.0, row = 0.0, choi = 0.0;
    for (const auto &code : codes) {
        DenseOracle oracle(code);
        const Eigen::Index dim = Eigen::Index{1} << code.n();
        DenseOperator sum = DenseOperator::Zero(dim, dim);
        for (std::uint64_t s = 0; s < code.num_syndromes(); ++s) {
            const DenseOperator &p = oracle.projector(Syndrome(code.num_checks(), s));
            projector = std::max(projector, (p * p - p).cwiseAbs().maxCoeff());
            sum += p;
        }
        projector = std::max(projector, (sum - DenseOperator::Identity(dim, dim)).cwiseAbs().maxCoeff());

        const DenseOperator &p0 = oracle.projector(Syndrome(code.num_checks(), 0));
        const auto basis = code.logical_basis();
        const double scale = std::pow(2.0, -static_cast<double>(code.k()) / 2);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            DenseOperator li = scale * dense_matrix(basis[i]) * p0;
            for (std::size_t j = 0; j < basis.size(); ++j) {
                DenseOperator lj = scale * dense_matrix(basis[j]) * p0;
                orthonormal = std::max(orthonormal, std::abs((li.adjoint() * lj).trace() - double(i == j)));
            }
        }

        const RecoveryTable table = RecoveryTable::min_weight(code);
        for (int m = 0; m < 10; ++m) {
            NoiseModel noise = (m % 2 ? testing::random_mixture_noise(rng, code.n())
                                      : testing::random_local_noise(rng, code.n()))
                                   .to_ptm();
            const auto raw = syndrome_distribution(code, noise);
            double total = 0.0;
            for (const auto &sc : raw) {
                total += sc.probability;
                choi = std::max(choi, -min_choi_eigenvalue(sc.unnormalized()));
            }
            probability = std::max(probability, std::abs(total - 1.0));
            for (const auto &channels : {raw, apply_recovery(raw, code, table)}) {
                Eigen::MatrixXd avg = average_logical_channel(channels);
                Eigen::RowVectorXd e0 = Eigen::RowVectorXd::Zero(avg.cols());
                e0(0) = 1.0;
                row = std::max(row, (avg.row(0) - e0).cwiseAbs().maxCoeff());
                choi = std::max(choi, -min_choi_eigenvalue(avg));
            }
        }
    }
    const bool passed = projector < 1e-12 && orthonormal < 1e-12 && probability < 1e-10 && row < 1e-12 && choi < 1e-9;
    return {passed, "projectors " + fmt("%.2g", projector) + ", orthonormality " + fmt("%.2g", orthonormal) +
                        ", sum p " + fmt("%.2g", probability) + ", row 0 " + fmt("%.2g", row) +
                        ", Choi negativity " + fmt("%.2g", std::max(choi, 0.0))};
}

}  // namespace
}  // namespace logicalnoise

int main() {
    using namespace logicalnoise;
    using Clock = std::chrono::steady_clock;
    int failures = 0;
    auto report = [&](int id, const char *name, const Outcome &o, double seconds) {
        std::string detail = o.detail;
        while (!detail.empty() && (detail.back() == ' ' || detail.back() == ';')) detail.pop_back();
        std::printf("[%s] criterion %d %s: %s [%.1f s]\n", o.passed ? "PASS" : "FAIL", id, name, detail.c_str(),
                    seconds);
        std::fflush(stdout);
        if (!o.passed) ++failures;
    };
    auto timed = [&](int id, const char *name, Outcome (*check)()) {
        const auto start = Clock::now();
        Outcome o = check();
        report(id, name, o, std::chrono::duration<double>(Clock::now() - start).count());
    };

    timed(1, "oracle equivalence", oracle_equivalence);
    timed(2, "error-matrix bounds fuzz", lemma1_fuzz);
    const auto start = Clock::now();
    SweepChecks sweep = rotation_sweep();
    const double sweep_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    report(3, "off-diagonal exponent", sweep.offdiag, sweep_seconds);
    report(4, "infidelity exponent", sweep.infidelity, 0.0);
    report(5, "decoherence ratio", sweep.ratio, 0.0);
    timed(6, "pauli diagonality", pauli_diagonality);
    timed(7, "rounds crossover", rounds_crossover);
    timed(8, "structural invariants", structural_invariants);
    std::printf("%d of 8 criteria passed\n", 8 - failures);
    return failures == 0 ? 0 : 1;
}
