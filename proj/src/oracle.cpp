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

#include "logicalnoise/oracle.hpp"

#include "logicalnoise/errors.hpp"

namespace logicalnoise {

KrausNoiseModel KrausNoiseModel::local(std::vector<KrausSet> factors) {
    KrausNoiseModel m;
    m.terms.push_back(Term{1.0, std::move(factors)});
    return m;
}

KrausNoiseModel KrausNoiseModel::iid(std::size_t n, const KrausSet &channel) {
    return local(std::vector<KrausSet>(n, channel));
}

NoiseModel KrausNoiseModel::to_ptm() const {
    std::vector<NoiseTerm> out;
    for (const auto &t : terms) {
        NoiseTerm nt{t.weight, {}};
        for (const auto &k : t.factors) nt.factors.push_back(ptm_from_kraus(k));
        out.push_back(std::move(nt));
    }
    return NoiseModel(std::move(out));
}

KrausNoiseModel to_kraus(const NoiseModel &noise) {
    KrausNoiseModel m;
    for (const auto &t : noise.terms()) {
        KrausNoiseModel::Term kt{t.weight, {}};
        for (const auto &f : t.factors) kt.factors.push_back(kraus_from_ptm(f));
        m.terms.push_back(std::move(kt));
    }
    return m;
}

DenseOperator apply_kraus_on_qubit(const DenseOperator &op, const KrausSet &kraus, std::size_t qubit) {
    if (kraus.dim() != 2) throw DimensionError("oracle applies single-qubit Kraus maps only");
    const Eigen::Index dim = op.rows();
    std::size_t n = 0;
    while ((Eigen::Index{1} << n) < dim) ++n;
    if (qubit >= n) throw DimensionError("qubit index out of range for dense operator");
    const Eigen::Index bit = Eigen::Index{1} << (n - 1 - qubit);
    DenseOperator out = DenseOperator::Zero(dim, dim);
    DenseOperator left(dim, dim);
    for (const auto &k : kraus.ops()) {
        const std::complex<double> k00 = k(0, 0), k01 = k(0, 1), k10 = k(1, 0), k11 = k(1, 1);
        // left = K op, acting on row indices.
        for (Eigen::Index c = 0; c < dim; ++c) {
            for (Eigen::Index r0 = 0; r0 < dim; ++r0) {
                if (r0 & bit) continue;
                const Eigen::Index r1 = r0 | bit;
                const std::complex<double> a = op(r0, c), b = op(r1, c);
                left(r0, c) = k00 * a + k01 * b;
                left(r1, c) = k10 * a + k11 * b;
            }
        }
        // out += left K^dag, acting on column indices.
        const std::complex<double> c00 = std::conj(k00), c01 = std::conj(k01), c10 = std::conj(k10),
                                   c11 = std::conj(k11);
        for (Eigen::Index c0 = 0; c0 < dim; ++c0) {
            if (c0 & bit) continue;
            const Eigen::Index c1 = c0 | bit;
            for (Eigen::Index r = 0; r < dim; ++r) {
                const std::complex<double> a = left(r, c0), b = left(r, c1);
                out(r, c0) += a * c00 + b * c01;
                out(r, c1) += a * c10 + b * c11;
            }
        }
    }
    return out;
}

DenseOperator apply_local_channel(const DenseOperator &op, const std::vector<KrausSet> &factors) {
    DenseOperator out = op;
    for (std::size_t j = 0; j < factors.size(); ++j) out = apply_kraus_on_qubit(out, factors[j], j);
    return out;
}

DenseOperator syndrome_projector(const StabilizerCode &code, const Syndrome &s) {
    if (s.length() != code.num_checks()) throw DimensionError("syndrome length does not match code");
    const std::size_t cap = dense_qubit_cap();
    const std::size_t dim = std::size_t{1} << code.n();
    if (code.n() > cap) throw ResourceError("oracle is capped at " + std::to_string(cap) + " qubits");
    const DenseOperator id = DenseOperator::Identity(dim, dim);
    DenseOperator proj = id;
    const auto &gens = code.generators();
    for (std::size_t j = 0; j < gens.size(); ++j) {
        const double sign = s.bit(j) ? -1.0 : 1.0;
        DenseOperator factor = 0.5 * (id + sign * dense_matrix(gens[j], cap));
        proj = proj * factor;
    }
    return proj;
}

DenseOracle::DenseOracle(const StabilizerCode &code) : code_(code) {
    const std::size_t cap = dense_qubit_cap();
    if (code.n() > cap) {
        throw ResourceError("oracle is capped at " + std::to_string(cap) + " qubits (LOGICALNOISE_MAX_N)");
    }
    const std::uint64_t count = code.num_syndromes();
    projectors_.reserve(count);
    for (std::uint64_t s = 0; s < count; ++s) projectors_.push_back(syndrome_projector(code, Syndrome(code.num_checks(), s)));
    for (const auto &l : code.logical_basis()) logicals_.push_back(dense_matrix(l, cap));
}

std::vector<DenseOperator> DenseOracle::evolved_inputs(const KrausNoiseModel &noise) const {
    if (noise.terms.empty() || noise.num_qubits() != code_.n()) {
        throw DimensionError("noise model does not match the code's qubit count");
    }
    const double scale = 1.0 / static_cast<double>(std::size_t{1} << code_.k());
    const DenseOperator &pi0 = projectors_.front();
    std::vector<DenseOperator> inputs;
    for (const auto &l : logicals_) {
        const DenseOperator input = l * pi0;
        DenseOperator acc = DenseOperator::Zero(input.rows(), input.cols());
        for (const auto &term : noise.terms) {
            if (term.factors.size() != code_.n()) throw DimensionError("noise term qubit count mismatch");
            acc += term.weight * apply_local_channel(input, term.factors);
        }
        inputs.push_back(scale * acc);
    }
    return inputs;
}

OracleChannel DenseOracle::channel_from_inputs(const std::vector<DenseOperator> &inputs, const Syndrome &s) const {
    const DenseOperator &proj = projector(s);
    const auto dim = static_cast<Eigen::Index>(logicals_.size());
    OracleChannel oc;
    oc.unnormalized.resize(dim, dim);
    for (Eigen::Index l = 0; l < dim; ++l) {
        // <<L Pi_s | X>> = Tr((L Pi_s)^dag X).
        const DenseOperator row_op = logicals_[l] * proj;
        for (Eigen::Index lp = 0; lp < dim; ++lp) {
            oc.unnormalized(l, lp) = (row_op.conjugate().cwiseProduct(inputs[lp])).sum().real();
        }
    }
    const double p = oc.unnormalized(0, 0);
    if (p < kDegenerateProbability) {
        oc.degenerate = true;
        oc.probability = 0.0;
        oc.ptm = oc.unnormalized;
    } else {
        oc.probability = p;
        oc.ptm = oc.unnormalized / p;
    }
    return oc;
}

double DenseOracle::syndrome_probability(const KrausNoiseModel &noise, const Syndrome &s) const {
    const double scale = 1.0 / static_cast<double>(std::size_t{1} << code_.k());
    const DenseOperator &pi0 = projectors_.front();
    double total = 0.0;
    for (const auto &term : noise.terms) {
        DenseOperator evolved = apply_local_channel(pi0, term.factors);
        total += term.weight * (projector(s) * evolved).trace().real();
    }
    return scale * total;
}

OracleChannel DenseOracle::syndrome_channel(const KrausNoiseModel &noise, const Syndrome &s) const {
    return channel_from_inputs(evolved_inputs(noise), s);
}

std::vector<OracleChannel> DenseOracle::all_channels(const KrausNoiseModel &noise) const {
    const auto inputs = evolved_inputs(noise);
    std::vector<OracleChannel> out;
    out.reserve(projectors_.size());
    for (std::size_t s = 0; s < projectors_.size(); ++s) {
        out.push_back(channel_from_inputs(inputs, Syndrome(code_.num_checks(), s)));
    }
    return out;
}

double oracle_logical_element(const StabilizerCode &code, const KrausNoiseModel &noise, const Syndrome &s,
                              std::size_t logical_row, std::size_t logical_col) {
    DenseOracle oracle(code);
    OracleChannel oc = oracle.syndrome_channel(noise, s);
    const auto dim = static_cast<std::size_t>(oc.ptm.rows());
    if (logical_row >= dim || logical_col >= dim) throw DimensionError("logical basis index out of range");
    return oc.ptm(static_cast<Eigen::Index>(logical_row), static_cast<Eigen::Index>(logical_col));
}

double oracle_syndrome_probability(const StabilizerCode &code, const KrausNoiseModel &noise, const Syndrome &s) {
    return DenseOracle(code).syndrome_probability(noise, s);
}

}  // namespace logicalnoise
