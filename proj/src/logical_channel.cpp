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

#include "logicalnoise/logical_channel.hpp"

#include <bit>
#include <cmath>
#include <thread>

#include "logicalnoise/errors.hpp"

namespace logicalnoise {

NoiseModel::NoiseModel(std::vector<NoiseTerm> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw ValidationError("noise model has no terms");
    const std::size_t n = terms_.front().factors.size();
    if (n == 0) throw ValidationError("noise model term has no factors");
    double total = 0.0;
    for (const auto &t : terms_) {
        if (t.factors.size() != n) throw DimensionError("noise model terms act on different qubit counts");
        if (!(t.weight >= 0.0)) throw ValidationError("noise model weights must be nonnegative");
        total += t.weight;
        for (const auto &f : t.factors) validate_cptp(f);
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw ValidationError("noise model weights sum to " + std::to_string(total) + ", expected 1");
    }
}

NoiseModel NoiseModel::local(std::vector<ProcessMatrix1Q> factors) {
    return NoiseModel({NoiseTerm{1.0, std::move(factors)}});
}

NoiseModel NoiseModel::iid(std::size_t n, const ProcessMatrix1Q &channel) {
    return local(std::vector<ProcessMatrix1Q>(n, channel));
}

bool NoiseModel::is_pauli() const {
    for (const auto &t : terms_) {
        for (const auto &f : t.factors) {
            if (!f.is_pauli_channel()) return false;
        }
    }
    return true;
}

double NoiseModel::max_infidelity() const {
    double r = 0.0;
    for (const auto &t : terms_) {
        for (const auto &f : t.factors) r = std::max(r, infidelity(f));
    }
    return r;
}

double NoiseModel::min_diagonal_error() const {
    double r = std::numeric_limits<double>::infinity();
    for (const auto &t : terms_) {
        for (const auto &f : t.factors) {
            for (int s = 1; s < 4; ++s) r = std::min(r, std::abs(1.0 - f(s, s)));
        }
    }
    return r;
}

NoiseModel NoiseModel::twirled() const {
    std::vector<NoiseTerm> out = terms_;
    for (auto &t : out) {
        for (auto &f : t.factors) f = pauli_twirl(f);
    }
    return NoiseModel(std::move(out));
}

Eigen::MatrixXd SyndromeChannel::error_matrix() const {
    const auto dim = noiseless_part.rows();
    if (degenerate) return Eigen::MatrixXd::Zero(dim, dim);
    Eigen::MatrixXd scaled_identity = probability * Eigen::MatrixXd::Identity(dim, dim);
    return (scaled_identity - noiseless_part - error_part) / probability;
}

namespace {

/// Site codes and chi signs of L * S_a for every logical basis element L and
/// stabilizer exponent vector a.
struct PairTables {
    std::size_t n = 0;
    std::size_t logical_dim = 0;
    std::size_t count = 0;
    std::vector<std::uint8_t> codes;  // [(l * count + a) * n + j]
    std::vector<std::int8_t> chi;     // [l * count + a]

    const std::uint8_t *sites(std::size_t l, std::size_t a) const { return &codes[(l * count + a) * n]; }
};

PairTables build_tables(const StabilizerCode &code) {
    PairTables t;
    t.n = code.n();
    t.logical_dim = code.logical_dim();
    t.count = static_cast<std::size_t>(code.num_syndromes());
    t.codes.resize(t.logical_dim * t.count * t.n);
    t.chi.resize(t.logical_dim * t.count);
    const auto basis = code.logical_basis();
    for (std::size_t a = 0; a < t.count; ++a) {
        PauliOperator s = code.stabilizer_element(a);
        for (std::size_t l = 0; l < t.logical_dim; ++l) {
            PauliOperator ls = basis[l] * s;
            t.chi[l * t.count + a] = static_cast<std::int8_t>(chi_sign(ls));
            std::uint8_t *dst = &t.codes[(l * t.count + a) * t.n];
            for (std::size_t j = 0; j < t.n; ++j) dst[j] = static_cast<std::uint8_t>(ls.site(j));
        }
    }
    return t;
}

/// Per-qubit PTM entries and diagonal deviations 1 - N[u][u] of one product term.
struct FactorTables {
    std::vector<double> entries;  // [j * 16 + u * 4 + v]
    std::vector<double> defect;   // [j * 4 + u]
};

FactorTables build_factors(const std::vector<ProcessMatrix1Q> &factors) {
    FactorTables f;
    f.entries.resize(factors.size() * 16);
    f.defect.resize(factors.size() * 4);
    for (std::size_t j = 0; j < factors.size(); ++j) {
        for (int u = 0; u < 4; ++u) {
            for (int v = 0; v < 4; ++v) f.entries[j * 16 + u * 4 + v] = factors[j](u, v);
            f.defect[j * 4 + u] = 1.0 - factors[j](u, u);
        }
    }
    return f;
}

/// Adds weight * sum_{a'} chi(L S_a) chi(L' S_a') [prod_j N_j - noiseless] into
/// out[l * dim + l'] for one stabilizer index a. The product over sites where
/// the two strings agree is carried as 1 - eps so the noiseless 1 never enters
/// the sum.
void accumulate_errors(const PairTables &t, const FactorTables &f, double weight, std::size_t a, double *out) {
    const std::size_t n = t.n;
    const std::size_t dim = t.logical_dim;
    for (std::size_t l = 0; l < dim; ++l) {
        const std::uint8_t *u = t.sites(l, a);
        const double cu = t.chi[l * t.count + a];
        for (std::size_t lp = 0; lp < dim; ++lp) {
            double acc = 0.0;
            for (std::size_t ap = 0; ap < t.count; ++ap) {
                const std::uint8_t *v = t.sites(lp, ap);
                double eps = 0.0;
                double prod = 1.0;
                bool differs = false;
                for (std::size_t j = 0; j < n; ++j) {
                    if (u[j] == v[j]) {
                        double d = f.defect[j * 4 + u[j]];
                        eps += d * (1.0 - eps);
                    } else {
                        differs = true;
                        prod *= f.entries[j * 16 + u[j] * 4 + v[j]];
                        if (prod == 0.0) break;
                    }
                }
                if (differs && prod == 0.0) continue;
                double term = differs ? prod * (1.0 - eps) : -eps;
                acc += t.chi[lp * t.count + ap] * term;
            }
            out[l * dim + lp] += weight * cu * acc;
        }
    }
}

/// Error contributions per stabilizer index: result[a * dim^2 + l * dim + l'].
std::vector<double> stabilizer_sums(const StabilizerCode &code, const NoiseModel &noise, const PairTables &t,
                                    unsigned jobs) {
    if (noise.num_qubits() != code.n()) {
        throw DimensionError("noise model acts on " + std::to_string(noise.num_qubits()) + " qubits, code has " +
                             std::to_string(code.n()));
    }
    const std::size_t block = t.logical_dim * t.logical_dim;
    std::vector<double> sums(t.count * block, 0.0);
    std::vector<FactorTables> factors;
    for (const auto &term : noise.terms()) factors.push_back(build_factors(term.factors));
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t a = begin; a < end; ++a) {
            for (std::size_t i = 0; i < factors.size(); ++i) {
                accumulate_errors(t, factors[i], noise.terms()[i].weight, a, &sums[a * block]);
            }
        }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(t.count)));
    if (jobs == 1) {
        work(0, t.count);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (t.count + jobs - 1) / jobs;
        for (unsigned w = 0; w < jobs; ++w) {
            std::size_t begin = w * chunk;
            std::size_t end = std::min(t.count, begin + chunk);
            if (begin < end) pool.emplace_back(work, begin, end);
        }
        for (auto &th : pool) th.join();
    }
    return sums;
}

SyndromeChannel make_channel(const Syndrome &s, std::size_t dim, Eigen::MatrixXd error) {
    SyndromeChannel sc{.syndrome = s};
    if (s.is_trivial()) {
        sc.noiseless_part = Eigen::MatrixXd::Identity(dim, dim);
    } else {
        sc.noiseless_part = Eigen::MatrixXd::Zero(dim, dim);
    }
    sc.error_part = std::move(error);
    Eigen::MatrixXd u = sc.unnormalized();
    double p = u(0, 0);
    if (p < kDegenerateProbability) {
        sc.degenerate = true;
        sc.probability = 0.0;
        sc.ptm = u;
    } else {
        sc.probability = p;
        sc.ptm = u / p;
    }
    return sc;
}

void check_syndrome(const StabilizerCode &code, const Syndrome &s) {
    if (s.length() != code.num_checks()) {
        throw DimensionError("syndrome length " + std::to_string(s.length()) + " does not match " +
                             std::to_string(code.num_checks()) + " checks");
    }
}

}  // namespace

SyndromeChannel logical_channel_factorized(const StabilizerCode &code, const NoiseModel &noise, const Syndrome &s) {
    check_syndrome(code, s);
    const PairTables t = build_tables(code);
    const std::vector<double> sums = stabilizer_sums(code, noise, t, 1);
    const std::size_t dim = t.logical_dim;
    Eigen::MatrixXd error = Eigen::MatrixXd::Zero(dim, dim);
    for (std::size_t a = 0; a < t.count; ++a) {
        const double sign = phi_sign(a, s);
        for (std::size_t l = 0; l < dim; ++l) {
            for (std::size_t lp = 0; lp < dim; ++lp) error(l, lp) += sign * sums[(a * dim + l) * dim + lp];
        }
    }
    error /= static_cast<double>(t.count);
    return make_channel(s, dim, std::move(error));
}

std::vector<SyndromeChannel> syndrome_distribution(const StabilizerCode &code, const NoiseModel &noise,
                                                   unsigned jobs) {
    const PairTables t = build_tables(code);
    std::vector<double> sums = stabilizer_sums(code, noise, t, jobs);
    const std::size_t dim = t.logical_dim;
    const std::size_t block = dim * dim;
    // In-place Walsh-Hadamard transform over the stabilizer index:
    // sums[s] <- sum_a (-1)^(a.s) sums[a].
    for (std::size_t half = 1; half < t.count; half <<= 1) {
        for (std::size_t base = 0; base < t.count; base += 2 * half) {
            for (std::size_t a = base; a < base + half; ++a) {
                double *lo = &sums[a * block];
                double *hi = &sums[(a + half) * block];
                for (std::size_t e = 0; e < block; ++e) {
                    double x = lo[e];
                    double y = hi[e];
                    lo[e] = x + y;
                    hi[e] = x - y;
                }
            }
        }
    }
    std::vector<SyndromeChannel> out;
    out.reserve(t.count);
    const double norm = 1.0 / static_cast<double>(t.count);
    for (std::size_t s = 0; s < t.count; ++s) {
        Eigen::MatrixXd error(dim, dim);
        for (std::size_t l = 0; l < dim; ++l) {
            for (std::size_t lp = 0; lp < dim; ++lp) error(l, lp) = sums[s * block + l * dim + lp] * norm;
        }
        out.push_back(make_channel(Syndrome(code.num_checks(), s), dim, std::move(error)));
    }
    return out;
}

Eigen::MatrixXd unnormalized_logical_ptm(const StabilizerCode &code, const std::vector<ProcessMatrix1Q> &factors,
                                         const Syndrome &s) {
    return logical_channel_factorized(code, NoiseModel::local(factors), s).unnormalized();
}

Eigen::VectorXd recovery_signs(const StabilizerCode &code, const PauliOperator &recovery) {
    const auto basis = code.logical_basis();
    Eigen::VectorXd signs(basis.size());
    for (std::size_t l = 0; l < basis.size(); ++l) signs(l) = commutes(basis[l], recovery) ? 1.0 : -1.0;
    return signs;
}

SyndromeChannel apply_recovery(const SyndromeChannel &sc, const StabilizerCode &code, const PauliOperator &recovery) {
    if (syndrome_of(code, recovery) != sc.syndrome) {
        throw ValidationError("recovery " + recovery.str() + " does not produce syndrome " + sc.syndrome.str());
    }
    const Eigen::VectorXd signs = recovery_signs(code, recovery);
    SyndromeChannel out = sc;
    out.ptm = signs.asDiagonal() * sc.ptm;
    out.noiseless_part = signs.asDiagonal() * sc.noiseless_part;
    out.error_part = signs.asDiagonal() * sc.error_part;
    return out;
}

std::vector<SyndromeChannel> apply_recovery(const std::vector<SyndromeChannel> &channels, const StabilizerCode &code,
                                            const RecoveryTable &table) {
    std::vector<SyndromeChannel> out;
    out.reserve(channels.size());
    for (const auto &sc : channels) out.push_back(apply_recovery(sc, code, table[sc.syndrome]));
    return out;
}

namespace {

void check_complete(const std::vector<SyndromeChannel> &channels) {
    if (channels.empty()) throw ValidationError("no syndrome channels to average");
    const std::size_t length = channels.front().syndrome.length();
    if (length >= 64 || channels.size() != (std::size_t{1} << length)) {
        throw ValidationError("syndrome set is incomplete: expected 2^" + std::to_string(length) + " channels");
    }
    std::vector<bool> seen(channels.size(), false);
    for (const auto &sc : channels) {
        if (sc.syndrome.length() != length || seen[sc.syndrome.bits()]) {
            throw ValidationError("syndrome set is inconsistent or has duplicates");
        }
        seen[sc.syndrome.bits()] = true;
    }
}

}  // namespace

Eigen::MatrixXd average_logical_channel(const std::vector<SyndromeChannel> &channels) {
    check_complete(channels);
    const auto dim = channels.front().ptm.rows();
    Eigen::MatrixXd noiseless = Eigen::MatrixXd::Zero(dim, dim);
    Eigen::MatrixXd error = Eigen::MatrixXd::Zero(dim, dim);
    for (const auto &sc : channels) {
        noiseless += sc.noiseless_part;
        error += sc.error_part;
    }
    return noiseless + error;
}

Eigen::MatrixXd average_error_matrix(const std::vector<SyndromeChannel> &channels) {
    check_complete(channels);
    const auto dim = channels.front().ptm.rows();
    Eigen::MatrixXd noiseless = Eigen::MatrixXd::Zero(dim, dim);
    Eigen::MatrixXd error = Eigen::MatrixXd::Zero(dim, dim);
    for (const auto &sc : channels) {
        noiseless += sc.noiseless_part;
        error += sc.error_part;
    }
    return (Eigen::MatrixXd::Identity(dim, dim) - noiseless) - error;
}

Eigen::MatrixXd logical_error_matrix(const std::vector<SyndromeChannel> &channels) {
    return average_error_matrix(channels).cwiseAbs();
}

CoherenceMetrics coherence_metrics_from_error(const Eigen::MatrixXd &error) {
    const auto size = error.rows();
    if (size != error.cols() || size < 4) throw DimensionError("logical PTM must be square 4^k x 4^k");
    const double m = std::sqrt(static_cast<double>(size));
    if (std::abs(m * m - static_cast<double>(size)) > 0.5) throw DimensionError("logical PTM must be 4^k x 4^k");
    CoherenceMetrics metrics;
    metrics.logical_infidelity = error.trace() / (m * m + m);
    double sq = 0.0;
    for (Eigen::Index i = 0; i < size; ++i) {
        for (Eigen::Index j = 0; j < size; ++j) {
            if (i == j) continue;
            double v = std::abs(error(i, j));
            metrics.max_offdiag = std::max(metrics.max_offdiag, v);
            sq += v * v;
        }
    }
    metrics.offdiag_frobenius = std::sqrt(sq);
    metrics.diag_ratio = metrics.logical_infidelity > 0.0 ? metrics.max_offdiag / metrics.logical_infidelity : 0.0;
    return metrics;
}

CoherenceMetrics coherence_metrics(const Eigen::MatrixXd &ptm) {
    return coherence_metrics_from_error(Eigen::MatrixXd::Identity(ptm.rows(), ptm.cols()) - ptm);
}

namespace {

/// Smallest integer h >= 1 with C(h, 2) * quadratic >= h * linear, i.e.
/// h = ceil(1 + 2 linear / quadratic).
double first_crossing(double quadratic, double linear) {
    if (!(quadratic > 0.0) || !(linear > 0.0)) return std::numeric_limits<double>::infinity();
    double h = std::ceil(1.0 + 2.0 * linear / quadratic);
    if (!std::isfinite(h)) return std::numeric_limits<double>::infinity();
    // Ties count as crossings; the division above can round a tie upward.
    if (h > 1.0 && (h - 2.0) * quadratic >= 2.0 * linear * (1.0 - 1e-12)) h -= 1.0;
    return h;
}

}  // namespace

CrossoverEstimates crossover_estimates(const Eigen::MatrixXd &e) {
    CrossoverEstimates est;
    const auto dim = e.rows();
    for (Eigen::Index s = 1; s < dim; ++s) {
        const double diag = e(s, s);
        if (!(diag > 0.0)) continue;
        double coherent = 0.0;
        for (Eigen::Index t = 0; t < dim; ++t) {
            if (t != s) coherent += e(s, t) * e(t, s);
        }
        est.h_pauli = std::min(est.h_pauli, first_crossing(diag * diag, diag));
        double hc = first_crossing(coherent, diag);
        if (hc < est.h_coherent) {
            est.h_coherent = hc;
            est.coherent_index = static_cast<std::size_t>(s);
        }
    }
    if (std::isfinite(est.h_pauli) && std::isfinite(est.h_coherent)) est.h_crit = est.h_pauli / est.h_coherent;
    return est;
}

RoundsReport rounds_accumulation(const Eigen::MatrixXd &e, long h) {
    if (h < 1) throw ValidationError("rounds must be >= 1");
    if (e.rows() != e.cols()) throw DimensionError("error matrix must be square");
    const auto dim = e.rows();
    RoundsReport report;
    report.rounds = h;
    const Eigen::MatrixXd one_round = Eigen::MatrixXd::Identity(dim, dim) - e;
    Eigen::MatrixXd power = Eigen::MatrixXd::Identity(dim, dim);
    Eigen::MatrixXd base = one_round;
    for (long k = h; k > 0; k >>= 1) {
        if (k & 1) power = power * base;
        base = base * base;
    }
    report.exact = power;
    const double hd = static_cast<double>(h);
    const double pairs = 0.5 * hd * (hd - 1.0);
    report.first_order = hd * e;
    report.second_order = pairs * (e * e);
    report.second_order_pauli.resize(dim);
    report.second_order_coherent.resize(dim);
    for (Eigen::Index s = 0; s < dim; ++s) {
        double coherent = 0.0;
        for (Eigen::Index t = 0; t < dim; ++t) {
            if (t != s) coherent += e(s, t) * e(t, s);
        }
        report.second_order_pauli(s) = pairs * e(s, s) * e(s, s);
        report.second_order_coherent(s) = pairs * coherent;
    }
    report.crossover = crossover_estimates(e);
    return report;
}

}  // namespace logicalnoise
