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

#include <cstddef>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "logicalnoise/channels.hpp"
#include "logicalnoise/stabilizer_code.hpp"

namespace logicalnoise {

/// Probabilities below this mark a syndrome as degenerate.
inline constexpr double kDegenerateProbability = 1e-14;

/// One product term p_alpha * (x)_j N^(alpha, j).
struct NoiseTerm {
    double weight = 1.0;
    std::vector<ProcessMatrix1Q> factors;
};

/// Local Markovian noise: a convex combination of product channels.
class NoiseModel {
   public:
    /// Validates: every term has the same number of factors, weights are
    /// nonnegative and sum to 1 within 1e-12, and every factor is CPTP.
    explicit NoiseModel(std::vector<NoiseTerm> terms);

    /// Product channel (x)_j factors[j].
    static NoiseModel local(std::vector<ProcessMatrix1Q> factors);
    /// The same channel on each of n qubits.
    static NoiseModel iid(std::size_t n, const ProcessMatrix1Q &channel);

    const std::vector<NoiseTerm> &terms() const { return terms_; }
    std::size_t num_qubits() const { return terms_.front().factors.size(); }

    /// True if every factor has a diagonal PTM.
    bool is_pauli() const;
    /// Largest single-qubit infidelity over all factors of all terms.
    double max_infidelity() const;
    /// r' = min over factors and sigma != I of the diagonal error |1 - N_ss|.
    double min_diagonal_error() const;
    /// Every factor replaced by its Pauli twirl.
    NoiseModel twirled() const;

   private:
    std::vector<NoiseTerm> terms_;
};

/// Effective logical channel conditioned on one syndrome.
///
/// `noiseless_part + error_part` is the unnormalized channel p(s) * ptm. The
/// noiseless part is the value the identity channel would produce (the
/// identity for s = 0, zero otherwise, before recovery) and is exact; the
/// error part is accumulated separately so that small logical errors are not
/// lost against O(1) terms.
struct SyndromeChannel {
    Syndrome syndrome;
    double probability = 0.0;
    /// p(s) < kDegenerateProbability: probability is reported as 0 and `ptm`
    /// holds the unnormalized entries.
    bool degenerate = false;
    /// 4^k x 4^k logical PTM over the normalized logical Pauli basis.
    Eigen::MatrixXd ptm{};
    Eigen::MatrixXd noiseless_part{};
    Eigen::MatrixXd error_part{};

    Eigen::MatrixXd unnormalized() const { return noiseless_part + error_part; }
    /// Signed I - ptm computed without forming 1 - (1 - x). Zero matrix when degenerate.
    Eigen::MatrixXd error_matrix() const;
};

/// Per-syndrome logical PTM from the factorized stabilizer-pair sum. Cost is
/// 4^(n-k) * 16^k * n products per noise term.
SyndromeChannel logical_channel_factorized(const StabilizerCode &code, const NoiseModel &noise, const Syndrome &s);

/// All 2^(n-k) syndrome channels, in syndrome order. The pair sum is shared
/// across syndromes and split with a fast Walsh-Hadamard transform; `jobs`
/// worker threads split the stabilizer sum.
std::vector<SyndromeChannel> syndrome_distribution(const StabilizerCode &code, const NoiseModel &noise,
                                                   unsigned jobs = 1);

/// Unnormalized channel p(s) * N(s) for a single product term (no mixture
/// weights applied).
Eigen::MatrixXd unnormalized_logical_ptm(const StabilizerCode &code, const std::vector<ProcessMatrix1Q> &factors,
                                         const Syndrome &s);

/// +1/-1 per logical basis element: whether `recovery` commutes with it.
Eigen::VectorXd recovery_signs(const StabilizerCode &code, const PauliOperator &recovery);

/// Composes the channel with conjugation by `recovery`, which maps the
/// syndrome-s space back to the code space. Throws ValidationError unless
/// syndrome_of(recovery) == sc.syndrome.
SyndromeChannel apply_recovery(const SyndromeChannel &sc, const StabilizerCode &code, const PauliOperator &recovery);
std::vector<SyndromeChannel> apply_recovery(const std::vector<SyndromeChannel> &channels, const StabilizerCode &code,
                                            const RecoveryTable &table);

/// sum_s p(s) ptm(s). Throws ValidationError unless `channels` holds each
/// syndrome exactly once.
Eigen::MatrixXd average_logical_channel(const std::vector<SyndromeChannel> &channels);

/// Signed I - sum_s p(s) ptm(s), accumulated from the error parts.
Eigen::MatrixXd average_error_matrix(const std::vector<SyndromeChannel> &channels);

/// Entrywise |I - M| of a syndrome-averaged logical channel.
Eigen::MatrixXd logical_error_matrix(const std::vector<SyndromeChannel> &channels);

struct CoherenceMetrics {
    double logical_infidelity = 0.0;
    double max_offdiag = 0.0;
    double offdiag_frobenius = 0.0;
    /// max_offdiag / logical_infidelity; 0 when the infidelity is 0.
    double diag_ratio = 0.0;
};

/// Metrics of a 4^k x 4^k logical PTM. The infidelity is
/// (m^2 - Tr M) / (m^2 + m) with m = 2^k.
CoherenceMetrics coherence_metrics(const Eigen::MatrixXd &ptm);
/// Same metrics from a signed error matrix I - M; preserves precision when M
/// is close to the identity.
CoherenceMetrics coherence_metrics_from_error(const Eigen::MatrixXd &error);

struct CrossoverEstimates {
    /// Round count where the Pauli-Pauli second-order diagonal term reaches the first-order term.
    double h_pauli = std::numeric_limits<double>::infinity();
    /// Round count where the coherent-coherent second-order diagonal term reaches the first-order term.
    double h_coherent = std::numeric_limits<double>::infinity();
    /// h_pauli / h_coherent: how much sooner coherent terms accumulate.
    double h_crit = std::numeric_limits<double>::infinity();
    /// Logical basis index that attains h_coherent (0 if none).
    std::size_t coherent_index = 0;
};

struct RoundsReport {
    long rounds = 1;
    Eigen::MatrixXd exact;         // (I - E)^h
    Eigen::MatrixXd first_order;   // h E
    Eigen::MatrixXd second_order;  // C(h, 2) E^2
    /// Diagonal of the second-order term split into E_ss^2 and sum_{t != s} E_st E_ts, each times C(h, 2).
    Eigen::VectorXd second_order_pauli;
    Eigen::VectorXd second_order_coherent;
    CrossoverEstimates crossover;
};

/// Smallest integer h at which C(h, 2) times the second-order diagonal term
/// reaches h E_ss, earliest over logical basis elements s >= 1.
CrossoverEstimates crossover_estimates(const Eigen::MatrixXd &error_matrix);

/// Accumulation of a nonnegative logical error matrix over h >= 1 rounds.
RoundsReport rounds_accumulation(const Eigen::MatrixXd &error_matrix, long h);

}  // namespace logicalnoise
