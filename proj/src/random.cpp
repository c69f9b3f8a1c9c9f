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

#include "logicalnoise/random.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "logicalnoise/errors.hpp"

namespace logicalnoise {

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    double u2 = uniform();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw ValidationError("Rng::below requires n > 0");
    // Rejection sampling keeps the result exactly uniform.
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v;
    do {
        v = engine_();
    } while (v >= limit);
    return v % n;
}

Eigen::VectorXcd random_pure_state(Rng &rng, int dim) {
    Eigen::VectorXcd v(dim);
    for (int i = 0; i < dim; ++i) v(i) = rng.complex_normal();
    return v / v.norm();
}

Eigen::Matrix2cd random_unitary(Rng &rng) {
    Eigen::Matrix2cd g;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) g(i, j) = rng.complex_normal();
    }
    Eigen::HouseholderQR<Eigen::Matrix2cd> qr(g);
    Eigen::Matrix2cd q = qr.householderQ();
    Eigen::Matrix2cd r = qr.matrixQR();
    // Fix column phases so the distribution is Haar.
    for (int j = 0; j < 2; ++j) {
        std::complex<double> d = r(j, j);
        if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
    }
    return q;
}

KrausSet random_kraus(Rng &rng, int rank) {
    if (rank < 1) throw ValidationError("Kraus rank must be >= 1");
    Eigen::MatrixXcd g(2 * rank, 2);
    for (int i = 0; i < 2 * rank; ++i) {
        for (int j = 0; j < 2; ++j) g(i, j) = rng.complex_normal();
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> gram(g.adjoint() * g);
    Eigen::MatrixXcd v = g * gram.operatorInverseSqrt();
    std::vector<Eigen::MatrixXcd> ops;
    ops.reserve(rank);
    for (int k = 0; k < rank; ++k) ops.push_back(v.block(2 * k, 0, 2, 2));
    return KrausSet(std::move(ops));
}

KrausSet random_channel(Rng &rng) {
    double lambda = std::pow(10.0, -6.0 * rng.uniform());
    Eigen::Vector3d axis(rng.normal(), rng.normal(), rng.normal());
    axis.normalize();
    double angle = std::sqrt(lambda) * rng.normal();
    KrausSet coherent = kraus::rotation(axis, angle);
    KrausSet noisy = random_kraus(rng, 1 + static_cast<int>(rng.below(4)));
    std::vector<Eigen::MatrixXcd> ops;
    ops.push_back(std::sqrt(1.0 - lambda) * coherent.ops().front());
    for (const auto &k : noisy.ops()) ops.push_back(std::sqrt(lambda) * k);
    return KrausSet(std::move(ops));
}

ProcessMatrix1Q random_pauli_channel(Rng &rng, double max_error) {
    double total = max_error * rng.uniform();
    double a = rng.uniform(), b = rng.uniform(), c = rng.uniform();
    double s = a + b + c;
    return pauli_channel(total * a / s, total * b / s, total * c / s);
}

}  // namespace logicalnoise
