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

#include "logicalnoise/channels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "logicalnoise/errors.hpp"

namespace logicalnoise {

using cd = std::complex<double>;

const std::array<Eigen::Matrix2cd, 4> &pauli_matrices() {
    static const std::array<Eigen::Matrix2cd, 4> kPaulis = [] {
        std::array<Eigen::Matrix2cd, 4> p;
        p[0] << 1, 0, 0, 1;
        p[1] << 0, 1, 1, 0;
        p[2] << 0, cd(0, -1), cd(0, 1), 0;
        p[3] << 1, 0, 0, -1;
        return p;
    }();
    return kPaulis;
}

KrausSet::KrausSet(std::vector<Eigen::MatrixXcd> ops) : ops_(std::move(ops)) {
    if (ops_.empty()) {
        throw ValidationError("Kraus set is empty");
    }
    const auto dim = ops_.front().rows();
    if (dim < 2 || (dim & (dim - 1)) != 0) {
        throw DimensionError("Kraus operator dimension must be a power of two >= 2");
    }
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &k : ops_) {
        if (k.rows() != dim || k.cols() != dim) {
            throw DimensionError("Kraus operators have inconsistent shapes");
        }
        sum += k.adjoint() * k;
    }
    double err = (sum - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff();
    if (err > kKrausTolerance) {
        throw ValidationError("Kraus set is not trace preserving (max |sum K^dag K - I| = " +
                              std::to_string(err) + ")");
    }
}

bool ProcessMatrix1Q::is_pauli_channel() const {
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            if (a != b && m_(a, b) != 0.0) return false;
        }
    }
    return true;
}

ProcessMatrix1Q then(const ProcessMatrix1Q &first, const ProcessMatrix1Q &second) {
    return ProcessMatrix1Q(second.entries() * first.entries());
}

ProcessMatrix1Q ptm_from_kraus(const KrausSet &kraus) {
    if (kraus.dim() != 2) {
        throw DimensionError("single-qubit PTM requires 2x2 Kraus operators");
    }
    const auto &P = pauli_matrices();
    Eigen::Matrix4d m;
    for (int b = 0; b < 4; ++b) {
        Eigen::Matrix2cd image = Eigen::Matrix2cd::Zero();
        for (const auto &k : kraus.ops()) {
            image += k * P[b] * k.adjoint();
        }
        for (int a = 0; a < 4; ++a) {
            m(a, b) = 0.5 * (P[a] * image).trace().real();
        }
    }
    return ProcessMatrix1Q(m);
}

Eigen::MatrixXcd choi_of(const Eigen::MatrixXd &ptm) {
    const auto size = static_cast<std::size_t>(ptm.rows());
    std::size_t k = 0;
    while ((std::size_t{1} << (2 * k)) < size) ++k;
    if (k == 0 || (std::size_t{1} << (2 * k)) != size || ptm.cols() != ptm.rows()) {
        throw DimensionError("PTM must be 4^k x 4^k with k >= 1");
    }
    const std::size_t dim = std::size_t{1} << k;
    std::vector<Eigen::MatrixXcd> paulis;
    paulis.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
        paulis.push_back(dense_matrix(pauli_from_basis_index(k, i), 16));
    }
    Eigen::MatrixXcd choi = Eigen::MatrixXcd::Zero(dim * dim, dim * dim);
    for (std::size_t a = 0; a < size; ++a) {
        for (std::size_t b = 0; b < size; ++b) {
            double v = ptm(a, b);
            if (v == 0.0) continue;
            Eigen::MatrixXcd bt = paulis[b].transpose();
            // Kronecker product bt (x) paulis[a].
            for (std::size_t i = 0; i < dim; ++i) {
                for (std::size_t j = 0; j < dim; ++j) {
                    if (bt(i, j) == cd(0)) continue;
                    choi.block(i * dim, j * dim, dim, dim) += (v * bt(i, j)) * paulis[a];
                }
            }
        }
    }
    return choi / static_cast<double>(dim);
}

Eigen::Matrix4cd choi_of(const ProcessMatrix1Q &ptm) {
    Eigen::MatrixXd m = ptm.entries();
    return choi_of(m);
}

double min_choi_eigenvalue(const Eigen::MatrixXd &ptm) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(choi_of(ptm), Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

namespace {

double trace_row_error(const ProcessMatrix1Q &ptm) {
    Eigen::RowVector4d expected(1, 0, 0, 0);
    return (ptm.entries().row(0) - expected).cwiseAbs().maxCoeff();
}

}  // namespace

bool is_cptp(const ProcessMatrix1Q &ptm, double tolerance) {
    if (trace_row_error(ptm) > tolerance) return false;
    Eigen::MatrixXd m = ptm.entries();
    return min_choi_eigenvalue(m) >= -tolerance;
}

void validate_cptp(const ProcessMatrix1Q &ptm, double tolerance) {
    double row_err = trace_row_error(ptm);
    if (row_err > tolerance) {
        throw ValidationError("PTM is not trace preserving (row 0 deviates by " + std::to_string(row_err) + ")");
    }
    Eigen::MatrixXd m = ptm.entries();
    double min_eig = min_choi_eigenvalue(m);
    if (min_eig < -tolerance) {
        throw ValidationError("PTM is not completely positive (min Choi eigenvalue " + std::to_string(min_eig) +
                              ")");
    }
}

KrausSet kraus_from_ptm(const ProcessMatrix1Q &ptm) {
    if (trace_row_error(ptm) > 1e-9) {
        throw ValidationError("PTM is not trace preserving");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(choi_of(ptm));
    const auto &values = solver.eigenvalues();
    const auto &vectors = solver.eigenvectors();
    if (values.minCoeff() < -1e-8) {
        throw ValidationError("PTM is not CPTP: Choi eigenvalue " + std::to_string(values.minCoeff()));
    }
    std::vector<Eigen::MatrixXcd> ops;
    for (int e = 3; e >= 0; --e) {
        if (values(e) <= 1e-13) continue;
        double scale = std::sqrt(values(e));
        Eigen::MatrixXcd k(2, 2);
        // Choi vector index (input, output) = input * 2 + output.
        for (int in = 0; in < 2; ++in) {
            for (int out = 0; out < 2; ++out) {
                k(out, in) = scale * vectors(in * 2 + out, e);
            }
        }
        ops.push_back(std::move(k));
    }
    // Clipping tiny negative eigenvalues perturbs sum K^dag K slightly; restore it.
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(2, 2);
    for (const auto &k : ops) sum += k.adjoint() * k;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> gram(sum);
    Eigen::MatrixXcd inv_sqrt = gram.operatorInverseSqrt();
    for (auto &k : ops) k = k * inv_sqrt;
    return KrausSet(std::move(ops));
}

double infidelity(const ProcessMatrix1Q &ptm) { return (4.0 - ptm.entries().trace()) / 6.0; }

Eigen::Matrix4d error_matrix(const ProcessMatrix1Q &ptm) {
    return (Eigen::Matrix4d::Identity() - ptm.entries()).cwiseAbs();
}

ProcessMatrix1Q pauli_twirl(const ProcessMatrix1Q &ptm) {
    Eigen::Matrix4d diag = ptm.entries().diagonal().asDiagonal();
    return ProcessMatrix1Q(diag);
}

Lemma1Report check_lemma1(const ProcessMatrix1Q &ptm, double tolerance) {
    Lemma1Report report;
    const double r = infidelity(ptm);
    report.r = r;
    const Eigen::Matrix4d e = error_matrix(ptm);
    const double three_r = 3.0 * r;
    const double off = std::sqrt(std::max(0.0, 6.0 * r));
    report.min_slack.fill(std::numeric_limits<double>::infinity());
    report.violations.fill(0);
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            Lemma1Bound which;
            double bound;
            if (a == 0) {
                which = Lemma1Bound::TracePreserving;
                bound = 0.0;
            } else if (b == 0) {
                which = Lemma1Bound::NonUnital;
                bound = three_r;
            } else if (a == b) {
                which = Lemma1Bound::Diagonal;
                bound = three_r;
            } else {
                which = Lemma1Bound::OffDiagonal;
                bound = off;
            }
            double slack = bound - e(a, b);
            auto idx = static_cast<int>(which);
            report.which[a][b] = which;
            report.bound[a][b] = bound;
            report.slack[a][b] = slack;
            report.min_slack[idx] = std::min(report.min_slack[idx], slack);
            if (slack < -tolerance) {
                ++report.violations[idx];
                report.passed = false;
            }
        }
    }
    return report;
}

DiamondBounds diamond_bounds(double r, int m) {
    if (!(r >= 0.0) || m < 2) {
        throw ValidationError("diamond_bounds requires r >= 0 and m >= 2");
    }
    return {r * (1.0 + 1.0 / m), std::sqrt(static_cast<double>(m) * (m + 1) * r)};
}

namespace {

void require(bool ok, const std::string &what) {
    if (!ok) throw ValidationError(what);
}

Eigen::MatrixXcd scaled(const Eigen::Matrix2cd &m, double s) { return Eigen::MatrixXcd(m * s); }

}  // namespace

namespace kraus {

KrausSet identity() { return KrausSet({Eigen::MatrixXcd::Identity(2, 2)}); }

KrausSet depolarizing(double p) {
    require(p >= 0.0 && p <= 4.0 / 3.0, "depolarizing p must lie in [0, 4/3]");
    const auto &P = pauli_matrices();
    double a = std::sqrt(std::max(0.0, 1.0 - 0.75 * p));
    double b = std::sqrt(p / 4.0);
    return KrausSet({scaled(P[0], a), scaled(P[1], b), scaled(P[2], b), scaled(P[3], b)});
}

KrausSet pauli_channel(double px, double py, double pz) {
    require(px >= 0 && py >= 0 && pz >= 0 && px + py + pz <= 1.0 + 1e-15,
            "Pauli channel probabilities must be nonnegative with sum <= 1");
    const auto &P = pauli_matrices();
    double pi = std::max(0.0, 1.0 - px - py - pz);
    return KrausSet({scaled(P[0], std::sqrt(pi)), scaled(P[1], std::sqrt(px)), scaled(P[2], std::sqrt(py)),
                     scaled(P[3], std::sqrt(pz))});
}

KrausSet dephasing(double p) {
    require(p >= 0.0 && p <= 1.0, "dephasing p must lie in [0, 1]");
    return pauli_channel(0, 0, p);
}

KrausSet bit_flip(double p) {
    require(p >= 0.0 && p <= 1.0, "bit flip p must lie in [0, 1]");
    return pauli_channel(p, 0, 0);
}

KrausSet amplitude_damping(double gamma) {
    require(gamma >= 0.0 && gamma <= 1.0, "amplitude damping gamma must lie in [0, 1]");
    Eigen::MatrixXcd k0 = Eigen::MatrixXcd::Zero(2, 2);
    Eigen::MatrixXcd k1 = Eigen::MatrixXcd::Zero(2, 2);
    k0(0, 0) = 1.0;
    k0(1, 1) = std::sqrt(1.0 - gamma);
    k1(0, 1) = std::sqrt(gamma);
    return KrausSet({k0, k1});
}

KrausSet rotation(const Eigen::Vector3d &axis, double theta) {
    require(std::abs(axis.norm() - 1.0) < 1e-9, "rotation axis must have unit norm");
    require(std::isfinite(theta), "rotation angle must be finite");
    const auto &P = pauli_matrices();
    Eigen::Matrix2cd n_sigma = axis(0) * P[1] + axis(1) * P[2] + axis(2) * P[3];
    Eigen::Matrix2cd u = std::cos(theta / 2) * P[0] - cd(0, std::sin(theta / 2)) * n_sigma;
    return KrausSet({Eigen::MatrixXcd(u)});
}

KrausSet rotation(Pauli1 axis, double theta) {
    require(axis != Pauli1::I, "rotation axis must be X, Y or Z");
    Eigen::Vector3d v = Eigen::Vector3d::Zero();
    v(static_cast<int>(axis) - 1) = 1.0;
    return rotation(v, theta);
}

KrausSet unitary(const Eigen::Matrix2cd &u) {
    double err = (u.adjoint() * u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
    require(err <= kKrausTolerance, "matrix is not unitary");
    return KrausSet({Eigen::MatrixXcd(u)});
}

KrausSet compose(std::span<const KrausSet> channels) {
    require(!channels.empty(), "compose requires at least one channel");
    std::vector<Eigen::MatrixXcd> acc = channels.front().ops();
    for (std::size_t c = 1; c < channels.size(); ++c) {
        if (channels[c].dim() != channels.front().dim()) {
            throw DimensionError("compose: channel dimensions differ");
        }
        std::vector<Eigen::MatrixXcd> next;
        next.reserve(acc.size() * channels[c].size());
        for (const auto &later : channels[c].ops()) {
            for (const auto &earlier : acc) {
                next.push_back(later * earlier);
            }
        }
        acc = std::move(next);
    }
    return KrausSet(std::move(acc));
}

KrausSet mixture(std::span<const double> weights, std::span<const KrausSet> channels) {
    require(!channels.empty() && weights.size() == channels.size(), "mixture needs one weight per channel");
    double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    require(std::abs(total - 1.0) < 1e-12, "mixture weights must sum to 1");
    std::vector<Eigen::MatrixXcd> ops;
    for (std::size_t c = 0; c < channels.size(); ++c) {
        require(weights[c] >= 0.0, "mixture weights must be nonnegative");
        if (weights[c] == 0.0) continue;
        for (const auto &k : channels[c].ops()) {
            ops.push_back(std::sqrt(weights[c]) * k);
        }
    }
    return KrausSet(std::move(ops));
}

}  // namespace kraus

ProcessMatrix1Q identity_channel() { return ProcessMatrix1Q(); }
ProcessMatrix1Q depolarizing(double p) { return ptm_from_kraus(kraus::depolarizing(p)); }
ProcessMatrix1Q dephasing(double p) { return ptm_from_kraus(kraus::dephasing(p)); }
ProcessMatrix1Q bit_flip(double p) { return ptm_from_kraus(kraus::bit_flip(p)); }
ProcessMatrix1Q pauli_channel(double px, double py, double pz) {
    return ptm_from_kraus(kraus::pauli_channel(px, py, pz));
}
ProcessMatrix1Q amplitude_damping(double gamma) { return ptm_from_kraus(kraus::amplitude_damping(gamma)); }
ProcessMatrix1Q rotation(const Eigen::Vector3d &axis, double theta) {
    return ptm_from_kraus(kraus::rotation(axis, theta));
}
ProcessMatrix1Q rotation(Pauli1 axis, double theta) { return ptm_from_kraus(kraus::rotation(axis, theta)); }
ProcessMatrix1Q unitary(const Eigen::Matrix2cd &u) { return ptm_from_kraus(kraus::unitary(u)); }

ProcessMatrix1Q compose(std::span<const ProcessMatrix1Q> channels) {
    require(!channels.empty(), "compose requires at least one channel");
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    for (const auto &c : channels) m = c.entries() * m;
    return ProcessMatrix1Q(m);
}

ProcessMatrix1Q mixture(std::span<const double> weights, std::span<const ProcessMatrix1Q> channels) {
    require(!channels.empty() && weights.size() == channels.size(), "mixture needs one weight per channel");
    double total = 0.0;
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    for (std::size_t c = 0; c < channels.size(); ++c) {
        require(weights[c] >= 0.0, "mixture weights must be nonnegative");
        total += weights[c];
        m += weights[c] * channels[c].entries();
    }
    require(std::abs(total - 1.0) < 1e-12, "mixture weights must sum to 1");
    return ProcessMatrix1Q(m);
}

}  // namespace logicalnoise
