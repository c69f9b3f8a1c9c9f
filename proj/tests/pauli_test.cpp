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

#include "logicalnoise/pauli.hpp"

#include <complex>
#include <cstdlib>
#include <random>

#include <gtest/gtest.h>

#include "logicalnoise/errors.hpp"
#include "logicalnoise/random.hpp"

namespace logicalnoise {
namespace {

using cd = std::complex<double>;

// Kronecker product of explicit 2x2 matrices, independent of dense_matrix.
Eigen::MatrixXcd kron_matrix(const PauliOperator &p) {
    Eigen::Matrix2cd mats[4];
    mats[0] << 1, 0, 0, 1;
    mats[1] << 0, 1, 1, 0;
    mats[2] << 0, cd(0, -1), cd(0, 1), 0;
    mats[3] << 1, 0, 0, -1;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (std::size_t q = 0; q < p.num_qubits(); ++q) {
        const Eigen::Matrix2cd &m = mats[static_cast<int>(p.site(q))];
        Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
        for (Eigen::Index r = 0; r < out.rows(); ++r)
            for (Eigen::Index c = 0; c < out.cols(); ++c) next.block(2 * r, 2 * c, 2, 2) = out(r, c) * m;
        out = next;
    }
    static const cd phases[4] = {cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};
    return phases[p.phase_exp()] * out;
}

PauliOperator random_pauli(Rng &rng, std::size_t n) {
    std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    return PauliOperator::from_bits(n, rng.bits() & mask, rng.bits() & mask, static_cast<int>(rng.below(4)));
}

TEST(PauliTest, XTimesZIsMinusIY) {
    auto p = multiply(PauliOperator::from_string("X"), PauliOperator::from_string("Z"));
    EXPECT_EQ(p.representative(), PauliOperator::from_string("Y"));
    EXPECT_EQ(p.phase_exp(), 3);
    EXPECT_EQ(p.str(), "-iY");
}

TEST(PauliTest, IdentityIsNeutral) {
    auto p = PauliOperator::from_string("-XYZIZ");
    EXPECT_EQ(multiply(PauliOperator(5), p), p);
    EXPECT_EQ(multiply(p, PauliOperator(5)), p);
}

TEST(PauliTest, HermitianPaulisSquareToIdentity) {
    for (const char *s : {"X", "Y", "Z", "XYZ", "-YY", "IZXY"}) {
        auto p = PauliOperator::from_string(s);
        auto sq = p * p;
        EXPECT_EQ(sq, PauliOperator(p.num_qubits())) << s;
        EXPECT_EQ(sq.phase_exp(), 0);
    }
}

TEST(PauliTest, Weight) {
    EXPECT_EQ(weight(PauliOperator(5)), 0u);
    EXPECT_EQ(weight(PauliOperator::from_string("XIZ")), 2u);
    EXPECT_EQ(weight(PauliOperator::from_string("XYZ")), 3u);
}

TEST(PauliTest, Commutation) {
    EXPECT_TRUE(commutes(PauliOperator::from_string("XX"), PauliOperator::from_string("ZZ")));
    EXPECT_FALSE(commutes(PauliOperator::from_string("XI"), PauliOperator::from_string("ZI")));
    auto p = PauliOperator::from_string("XYZY");
    EXPECT_TRUE(commutes(p, p));
}

TEST(PauliTest, ChiSign) {
    EXPECT_EQ(chi_sign(PauliOperator::from_string("XZY")), 1);
    // Z X = iY; one more factor of i gives -Y.
    auto zx = PauliOperator::from_string("Z") * PauliOperator::from_string("X");
    EXPECT_EQ(zx.phase_exp(), 1);
    auto minus_y = zx * PauliOperator::from_string("iI");
    EXPECT_EQ(minus_y.phase_exp(), 2);
    EXPECT_EQ(chi_sign(minus_y), -1);
    auto xz = PauliOperator::from_string("X") * PauliOperator::from_string("Z");
    EXPECT_THROW(chi_sign(xz), NonHermitianError);
}

TEST(PauliTest, ParsingAndPrinting) {
    EXPECT_EQ(PauliOperator::from_string("+XIZ").str(), "+XIZ");
    EXPECT_EQ(PauliOperator::from_string("-ZZ").phase_exp(), 2);
    EXPECT_EQ(PauliOperator::from_string("−ZZ").phase_exp(), 2);
    EXPECT_EQ(PauliOperator::from_string("-iX").phase_exp(), 3);
    EXPECT_THROW(PauliOperator::from_string("XQ"), ValidationError);
    EXPECT_THROW(PauliOperator::from_string(""), ValidationError);
}

TEST(PauliTest, DenseMatrixConventions) {
    Eigen::Matrix2cd z;
    z << 1, 0, 0, -1;
    EXPECT_EQ(dense_matrix(PauliOperator::from_bits(1, 0, 1)), Eigen::MatrixXcd(z));
    Eigen::Matrix2cd y;
    y << 0, cd(0, -1), cd(0, 1), 0;
    EXPECT_EQ(dense_matrix(PauliOperator::from_bits(1, 1, 1)), Eigen::MatrixXcd(y));
}

TEST(PauliTest, DenseMatrixMatchesKroneckerProduct) {
    Rng rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        auto p = random_pauli(rng, 1 + rng.below(4));
        EXPECT_EQ(dense_matrix(p), kron_matrix(p)) << p.str();
    }
}

TEST(PauliPropertyTest, ProductMatchesDenseProductExactly) {
    Rng rng(2024);
    for (int trial = 0; trial < 10000; ++trial) {
        std::size_t n = 1 + rng.below(4);
        auto p = random_pauli(rng, n);
        auto q = random_pauli(rng, n);
        Eigen::MatrixXcd expected = kron_matrix(p) * kron_matrix(q);
        ASSERT_EQ(dense_matrix(multiply(p, q)), expected) << p.str() << " * " << q.str();
        ASSERT_LE(weight(multiply(p, q)), weight(p) + weight(q));
    }
}

TEST(PauliPropertyTest, CommutesMatchesDenseCommutator) {
    Rng rng(7);
    for (int trial = 0; trial < 10000; ++trial) {
        std::size_t n = 1 + rng.below(4);
        auto p = random_pauli(rng, n);
        auto q = random_pauli(rng, n);
        Eigen::MatrixXcd a = kron_matrix(p), b = kron_matrix(q);
        bool dense_commute = (a * b - b * a).cwiseAbs().maxCoeff() == 0.0;
        ASSERT_EQ(commutes(p, q), dense_commute) << p.str() << " , " << q.str();
    }
}

TEST(PauliPropertyTest, ChiSignReconstructsHermitianOperators) {
    Rng rng(5);
    for (int trial = 0; trial < 2000; ++trial) {
        auto p = random_pauli(rng, 1 + rng.below(4));
        if (!p.is_hermitian()) {
            EXPECT_THROW(chi_sign(p), NonHermitianError);
            continue;
        }
        Eigen::MatrixXcd rebuilt = static_cast<double>(chi_sign(p)) * kron_matrix(p.representative());
        ASSERT_EQ(rebuilt, kron_matrix(p));
    }
}

TEST(PauliTest, BasisIndexOrdering) {
    EXPECT_EQ(pauli_from_basis_index(2, 0), PauliOperator::from_string("II"));
    EXPECT_EQ(pauli_from_basis_index(2, 1), PauliOperator::from_string("IX"));
    EXPECT_EQ(pauli_from_basis_index(2, 4), PauliOperator::from_string("XI"));
    EXPECT_EQ(pauli_from_basis_index(2, 15), PauliOperator::from_string("ZZ"));
}

TEST(PauliTest, DenseMatrixRespectsCap) {
    EXPECT_THROW(dense_matrix(PauliOperator(9), 8), ResourceError);
    EXPECT_NO_THROW(dense_matrix(PauliOperator(3), 3));
}

}  // namespace
}  // namespace logicalnoise
