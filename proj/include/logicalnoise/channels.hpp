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

#include <array>
#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "logicalnoise/pauli.hpp"

namespace logicalnoise {

/// Absolute eigenvalue floor for Choi positivity.
inline constexpr double kChoiTolerance = 1e-10;
/// Tolerance on sum K^dag K = I.
inline constexpr double kKrausTolerance = 1e-10;

/// Kraus operators of a channel on m qubits (2^m x 2^m each).
class KrausSet {
   public:
    /// Validates that all operators share one power-of-two dimension and that
    /// sum K^dag K = I within kKrausTolerance.
    explicit KrausSet(std::vector<Eigen::MatrixXcd> ops);

    const std::vector<Eigen::MatrixXcd> &ops() const { return ops_; }
    std::size_t dim() const { return static_cast<std::size_t>(ops_.front().rows()); }
    std::size_t size() const { return ops_.size(); }

   private:
    std::vector<Eigen::MatrixXcd> ops_;
};

/// Real 4x4 Pauli transfer matrix in the normalized basis {I, X, Y, Z}/sqrt(2):
/// entry (a, b) = Tr(P_a N(P_b)) / 2.
class ProcessMatrix1Q {
   public:
    ProcessMatrix1Q() : m_(Eigen::Matrix4d::Identity()) {}
    explicit ProcessMatrix1Q(const Eigen::Matrix4d &entries) : m_(entries) {}

    const Eigen::Matrix4d &entries() const { return m_; }
    double operator()(int row, int col) const { return m_(row, col); }

    /// True if every off-diagonal entry is exactly zero.
    bool is_pauli_channel() const;

   private:
    Eigen::Matrix4d m_;
};

/// Channel composition: `second` after `first`.
ProcessMatrix1Q then(const ProcessMatrix1Q &first, const ProcessMatrix1Q &second);

ProcessMatrix1Q ptm_from_kraus(const KrausSet &kraus);

/// Kraus operators from the Choi eigendecomposition. Throws ValidationError if
/// the Choi matrix has an eigenvalue below -1e-8.
KrausSet kraus_from_ptm(const ProcessMatrix1Q &ptm);

/// Choi matrix sum_ij |i><j| (x) N(|i><j|), trace 2 for trace-preserving maps.
Eigen::Matrix4cd choi_of(const ProcessMatrix1Q &ptm);

/// Choi matrix of a 4^k x 4^k PTM over normalized k-qubit Paulis in (I,X,Y,Z)^k
/// order, first qubit most significant.
Eigen::MatrixXcd choi_of(const Eigen::MatrixXd &ptm);

/// Smallest Choi eigenvalue of a 4^k x 4^k PTM.
double min_choi_eigenvalue(const Eigen::MatrixXd &ptm);

/// Trace-preservation row and Choi positivity.
bool is_cptp(const ProcessMatrix1Q &ptm, double tolerance = kChoiTolerance);

/// Throws ValidationError describing the first failed CPTP condition.
void validate_cptp(const ProcessMatrix1Q &ptm, double tolerance = kChoiTolerance);

/// Average gate infidelity to the identity, (4 - Tr N) / 6.
double infidelity(const ProcessMatrix1Q &ptm);

/// Entrywise |I - N|.
Eigen::Matrix4d error_matrix(const ProcessMatrix1Q &ptm);

/// Diagonal part of the PTM; equals the conjugation average over {I, X, Y, Z}.
ProcessMatrix1Q pauli_twirl(const ProcessMatrix1Q &ptm);

enum class Lemma1Bound : int {
    TracePreserving = 0,  // E[0][s] = 0
    NonUnital = 1,        // E[s][0] <= 3r
    Diagonal = 2,         // E[s][s] <= 3r
    OffDiagonal = 3,      // E[s][t] <= sqrt(6r)
};

struct Lemma1Report {
    double r = 0.0;
    /// Bound applied to each error-matrix entry and bound minus value.
    std::array<std::array<Lemma1Bound, 4>, 4> which{};
    std::array<std::array<double, 4>, 4> bound{};
    std::array<std::array<double, 4>, 4> slack{};
    /// Minimum slack per Lemma1Bound.
    std::array<double, 4> min_slack{};
    std::array<int, 4> violations{};
    bool passed = true;
};

/// Evaluates the four element-wise error-matrix bounds in terms of the
/// infidelity r. Violations beyond `tolerance` are counted, never thrown.
Lemma1Report check_lemma1(const ProcessMatrix1Q &ptm, double tolerance = 1e-9);

struct DiamondBounds {
    double lower;
    double upper;
};

/// r (1 + 1/m) <= diamond distance <= sqrt(m (m + 1) r).
DiamondBounds diamond_bounds(double r, int m);

/// Kraus-form constructors; the PTM constructors below are built from these.
namespace kraus {

KrausSet identity();
KrausSet depolarizing(double p);
KrausSet dephasing(double p);
KrausSet bit_flip(double p);
KrausSet pauli_channel(double px, double py, double pz);
KrausSet amplitude_damping(double gamma);
/// exp(-i theta (axis . sigma) / 2); `axis` must be unit norm.
KrausSet rotation(const Eigen::Vector3d &axis, double theta);
KrausSet rotation(Pauli1 axis, double theta);
KrausSet unitary(const Eigen::Matrix2cd &u);
/// Applies `channels` in list order.
KrausSet compose(std::span<const KrausSet> channels);
KrausSet mixture(std::span<const double> weights, std::span<const KrausSet> channels);

}  // namespace kraus

ProcessMatrix1Q identity_channel();
/// PTM diag(1, 1-p, 1-p, 1-p); p in [0, 4/3].
ProcessMatrix1Q depolarizing(double p);
/// Z flip with probability p.
ProcessMatrix1Q dephasing(double p);
/// X flip with probability p.
ProcessMatrix1Q bit_flip(double p);
ProcessMatrix1Q pauli_channel(double px, double py, double pz);
ProcessMatrix1Q amplitude_damping(double gamma);
ProcessMatrix1Q rotation(const Eigen::Vector3d &axis, double theta);
ProcessMatrix1Q rotation(Pauli1 axis, double theta);
ProcessMatrix1Q unitary(const Eigen::Matrix2cd &u);
/// Applies `channels` in list order (the PTM product runs right to left).
ProcessMatrix1Q compose(std::span<const ProcessMatrix1Q> channels);
/// Convex combination; weights must be nonnegative and sum to 1.
ProcessMatrix1Q mixture(std::span<const double> weights, std::span<const ProcessMatrix1Q> channels);

/// Unnormalized single-qubit Paulis in (I, X, Y, Z) order.
const std::array<Eigen::Matrix2cd, 4> &pauli_matrices();

}  // namespace logicalnoise
