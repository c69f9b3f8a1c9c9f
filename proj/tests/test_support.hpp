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

#include <algorithm>
#include <vector>

#include "logicalnoise/channels.hpp"
#include "logicalnoise/logical_channel.hpp"
#include "logicalnoise/oracle.hpp"
#include "logicalnoise/random.hpp"

namespace logicalnoise::testing {

// Independent random CPTP map on each qubit, ranks 1 to 4.
inline KrausNoiseModel random_local_noise(Rng &rng, std::size_t n) {
    std::vector<KrausSet> factors;
    for (std::size_t q = 0; q < n; ++q) factors.push_back(random_kraus(rng, 1 + static_cast<int>(rng.below(4))));
    return KrausNoiseModel::local(std::move(factors));
}

// Two-term mixture of random local models (a correlated noise model).
inline KrausNoiseModel random_mixture_noise(Rng &rng, std::size_t n) {
    KrausNoiseModel a = random_local_noise(rng, n);
    KrausNoiseModel b = random_local_noise(rng, n);
    double w = 0.1 + 0.8 * rng.uniform();
    KrausNoiseModel out;
    out.terms.push_back({w, a.terms.front().factors});
    out.terms.push_back({1.0 - w, b.terms.front().factors});
    return out;
}

inline NoiseModel random_pauli_noise(Rng &rng, std::size_t n, double max_error = 0.3) {
    std::vector<ProcessMatrix1Q> factors;
    for (std::size_t q = 0; q < n; ++q) factors.push_back(random_pauli_channel(rng, max_error));
    return NoiseModel::local(std::move(factors));
}

struct Deviation {
    double probability = 0.0;
    double ptm = 0.0;
    double max() const { return std::max(probability, ptm); }
};

// Every p(s) and every normalized PTM entry; syndromes flagged degenerate on
// both sides are compared unnormalized.
inline Deviation literal_deviation(const std::vector<SyndromeChannel> &fast, const std::vector<OracleChannel> &dense) {
    Deviation d;
    for (std::size_t i = 0; i < fast.size(); ++i) {
        d.probability = std::max(d.probability, std::abs(fast[i].probability - dense[i].probability));
        const Eigen::MatrixXd &a = fast[i].degenerate && dense[i].degenerate ? fast[i].unnormalized() : fast[i].ptm;
        const Eigen::MatrixXd &b = fast[i].degenerate && dense[i].degenerate ? dense[i].unnormalized : dense[i].ptm;
        d.ptm = std::max(d.ptm, (a - b).cwiseAbs().maxCoeff());
    }
    return d;
}

inline double max_offdiagonal(const Eigen::MatrixXd &m) {
    double best = 0.0;
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            if (r != c) best = std::max(best, std::abs(m(r, c)));
    return best;
}

}  // namespace logicalnoise::testing
