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

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "logicalnoise/channels.hpp"

namespace logicalnoise {

/// Seedable generator with platform-independent output: std::mt19937_64 for
/// raw bits, 53-bit mantissa uniforms and Box-Muller normals. No
/// std::*_distribution is involved.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t bits() { return engine_(); }
    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double normal();
    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n);
    std::complex<double> complex_normal() { return {normal(), normal()}; }

   private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Haar-random pure state in C^dim.
Eigen::VectorXcd random_pure_state(Rng &rng, int dim);

/// Haar-random 2x2 unitary.
Eigen::Matrix2cd random_unitary(Rng &rng);

/// Random CPTP map with `rank` Kraus operators: a complex Gaussian 2*rank x 2
/// matrix G is re-orthonormalized to the isometry G (G^dag G)^(-1/2) and cut
/// into 2x2 blocks.
KrausSet random_kraus(Rng &rng, int rank);

/// Random CPTP map spread across strengths: with weight 1-lambda a near
/// identity unitary, with weight lambda a random_kraus map of random rank;
/// lambda is log-uniform on [1e-6, 1].
KrausSet random_channel(Rng &rng);

/// Random Pauli channel with total error probability up to `max_error`.
ProcessMatrix1Q random_pauli_channel(Rng &rng, double max_error);

}  // namespace logicalnoise
