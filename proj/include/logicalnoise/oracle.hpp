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
#include <vector>

#include <Eigen/Dense>

#include "logicalnoise/channels.hpp"
#include "logicalnoise/logical_channel.hpp"
#include "logicalnoise/stabilizer_code.hpp"

namespace logicalnoise {

/// Dense 2^n x 2^n operator, qubit 0 the most significant tensor factor.
using DenseOperator = Eigen::MatrixXcd;

/// Local noise in Kraus form, the oracle's native input.
struct KrausNoiseModel {
    struct Term {
        double weight = 1.0;
        std::vector<KrausSet> factors;
    };
    std::vector<Term> terms;

    static KrausNoiseModel local(std::vector<KrausSet> factors);
    static KrausNoiseModel iid(std::size_t n, const KrausSet &channel);

    std::size_t num_qubits() const { return terms.front().factors.size(); }
    /// The same model as PTMs for the fast path.
    NoiseModel to_ptm() const;
};

/// Kraus form of a PTM noise model via kraus_from_ptm.
KrausNoiseModel to_kraus(const NoiseModel &noise);

/// Applies the single-qubit Kraus map `kraus` to qubit `qubit` of `op`, i.e.
/// sum_K (K on qubit) op (K on qubit)^dag, without building the superoperator.
DenseOperator apply_kraus_on_qubit(const DenseOperator &op, const KrausSet &kraus, std::size_t qubit);

/// (x)_j factors[j] applied to `op` qubit by qubit.
DenseOperator apply_local_channel(const DenseOperator &op, const std::vector<KrausSet> &factors);

/// prod_j (I + (-1)^{s_j} g_j) / 2 as a dense product.
DenseOperator syndrome_projector(const StabilizerCode &code, const Syndrome &s);

/// Result of the dense oracle for one syndrome; mirrors SyndromeChannel.
struct OracleChannel {
    double probability = 0.0;
    bool degenerate = false;
    Eigen::MatrixXd ptm;
    Eigen::MatrixXd unnormalized;
};

/// Brute-force logical channel extraction from trace inner products
/// <<L Pi_s | N | L' Pi_0>> / 2^k on dense matrices. Projectors and logical
/// operators are cached per code. Throws ResourceError above dense_qubit_cap().
class DenseOracle {
   public:
    explicit DenseOracle(const StabilizerCode &code);

    const StabilizerCode &code() const { return code_; }
    const DenseOperator &projector(const Syndrome &s) const { return projectors_.at(s.bits()); }

    /// 2^-k Tr(Pi_s N(Pi_0)).
    double syndrome_probability(const KrausNoiseModel &noise, const Syndrome &s) const;
    OracleChannel syndrome_channel(const KrausNoiseModel &noise, const Syndrome &s) const;
    std::vector<OracleChannel> all_channels(const KrausNoiseModel &noise) const;

   private:
    /// N(L' Pi_0) / 2^k for every logical L', combined term by term.
    std::vector<DenseOperator> evolved_inputs(const KrausNoiseModel &noise) const;
    OracleChannel channel_from_inputs(const std::vector<DenseOperator> &inputs, const Syndrome &s) const;

    StabilizerCode code_;
    std::vector<DenseOperator> projectors_;
    std::vector<DenseOperator> logicals_;
};

/// Single element N(s)_{L, L'} with the fast path's p(s) convention
/// (unnormalized when p(s) < kDegenerateProbability).
double oracle_logical_element(const StabilizerCode &code, const KrausNoiseModel &noise, const Syndrome &s,
                              std::size_t logical_row, std::size_t logical_col);

double oracle_syndrome_probability(const StabilizerCode &code, const KrausNoiseModel &noise, const Syndrome &s);

}  // namespace logicalnoise
