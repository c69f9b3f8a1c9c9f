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

#include <bit>
#include <cstdlib>

#include "logicalnoise/errors.hpp"

namespace logicalnoise {

namespace {

std::uint64_t low_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1); }

void check_size(std::size_t n) {
    if (n == 0 || n > kMaxQubits) {
        throw DimensionError("Pauli operator qubit count must be in [1, " + std::to_string(kMaxQubits) +
                             "], got " + std::to_string(n));
    }
}

void check_same_size(const PauliOperator &p, const PauliOperator &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw DimensionError("Pauli qubit counts differ: " + std::to_string(p.num_qubits()) + " vs " +
                             std::to_string(q.num_qubits()));
    }
}

}  // namespace

PauliOperator::PauliOperator(std::size_t num_qubits) : PauliOperator(num_qubits, 0, 0, 0) {}

PauliOperator::PauliOperator(std::size_t n, std::uint64_t x, std::uint64_t z, int phase)
    : num_qubits_(n), x_(x), z_(z), phase_(((phase % 4) + 4) % 4) {
    check_size(n);
    if ((x_ | z_) & ~low_mask(n)) {
        throw DimensionError("Pauli bits set beyond qubit count " + std::to_string(n));
    }
}

PauliOperator PauliOperator::from_bits(std::size_t num_qubits, std::uint64_t x_bits, std::uint64_t z_bits,
                                       int phase_exp) {
    return PauliOperator(num_qubits, x_bits, z_bits, phase_exp);
}

PauliOperator PauliOperator::from_string(std::string_view text) {
    int phase = 0;
    if (text.starts_with("+")) {
        text.remove_prefix(1);
    } else if (text.starts_with("-")) {
        phase = 2;
        text.remove_prefix(1);
    } else if (text.starts_with("\xE2\x88\x92")) {  // U+2212 minus sign
        phase = 2;
        text.remove_prefix(3);
    }
    if (text.starts_with("i")) {
        phase += 1;
        text.remove_prefix(1);
    }
    if (text.empty()) throw ValidationError("empty Pauli string");
    check_size(text.size());
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (std::size_t q = 0; q < text.size(); ++q) {
        std::uint64_t bit = std::uint64_t{1} << q;
        switch (text[q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                x |= bit;
                break;
            case 'Y':
                x |= bit;
                z |= bit;
                break;
            case 'Z':
                z |= bit;
                break;
            default:
                throw ValidationError("invalid Pauli character '" + std::string(1, text[q]) + "' in \"" +
                                      std::string(text) + "\"");
        }
    }
    return PauliOperator(text.size(), x, z, phase);
}

PauliOperator PauliOperator::single(std::size_t num_qubits, std::size_t qubit, Pauli1 which) {
    if (qubit >= num_qubits) {
        throw DimensionError("qubit index " + std::to_string(qubit) + " out of range");
    }
    std::uint64_t bit = std::uint64_t{1} << qubit;
    bool has_x = which == Pauli1::X || which == Pauli1::Y;
    bool has_z = which == Pauli1::Z || which == Pauli1::Y;
    return PauliOperator(num_qubits, has_x ? bit : 0, has_z ? bit : 0, 0);
}

Pauli1 PauliOperator::site(std::size_t qubit) const {
    bool bx = x(qubit);
    bool bz = z(qubit);
    if (bx) {
        return bz ? Pauli1::Y : Pauli1::X;
    }
    return bz ? Pauli1::Z : Pauli1::I;
}

PauliOperator PauliOperator::times_i(int k) const { return PauliOperator(num_qubits_, x_, z_, phase_ + k); }

std::string PauliOperator::str() const {
    static constexpr const char *kPrefix[4] = {"+", "+i", "-", "-i"};
    std::string out = kPrefix[phase_];
    for (std::size_t q = 0; q < num_qubits_; ++q) {
        out.push_back("IXYZ"[static_cast<int>(site(q))]);
    }
    return out;
}

PauliOperator multiply(const PauliOperator &p, const PauliOperator &q) {
    check_same_size(p, q);
    std::uint64_t x1 = p.x_bits(), z1 = p.z_bits();
    std::uint64_t x2 = q.x_bits(), z2 = q.z_bits();
    std::uint64_t px = x1 & ~z1, py = x1 & z1, pz = ~x1 & z1;
    std::uint64_t qx = x2 & ~z2, qy = x2 & z2, qz = ~x2 & z2;
    // XY = iZ, YZ = iX, ZX = iY; reversed orders pick up -i.
    std::uint64_t plus = (px & qy) | (py & qz) | (pz & qx);
    std::uint64_t minus = (py & qx) | (pz & qy) | (px & qz);
    int phase = p.phase_exp() + q.phase_exp() + std::popcount(plus) - std::popcount(minus);
    return PauliOperator::from_bits(p.num_qubits(), x1 ^ x2, z1 ^ z2, phase);
}

std::size_t weight(const PauliOperator &p) { return std::popcount(p.x_bits() | p.z_bits()); }

bool commutes(const PauliOperator &p, const PauliOperator &q) {
    check_same_size(p, q);
    std::uint64_t form = (p.x_bits() & q.z_bits()) ^ (p.z_bits() & q.x_bits());
    return (std::popcount(form) & 1) == 0;
}

int chi_sign(const PauliOperator &p) {
    switch (p.phase_exp()) {
        case 0:
            return 1;
        case 2:
            return -1;
        default:
            throw NonHermitianError("Pauli product " + p.str() + " is not Hermitian");
    }
}

PauliOperator pauli_from_basis_index(std::size_t num_qubits, std::size_t index) {
    check_size(num_qubits);
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (std::size_t q = num_qubits; q-- > 0;) {
        auto digit = static_cast<Pauli1>(index & 3u);
        index >>= 2;
        std::uint64_t bit = std::uint64_t{1} << q;
        if (digit == Pauli1::X || digit == Pauli1::Y) x |= bit;
        if (digit == Pauli1::Z || digit == Pauli1::Y) z |= bit;
    }
    if (index != 0) {
        throw DimensionError("Pauli basis index out of range for " + std::to_string(num_qubits) + " qubits");
    }
    return PauliOperator::from_bits(num_qubits, x, z);
}

std::size_t dense_qubit_cap() {
    if (const char *env = std::getenv("LOGICALNOISE_MAX_N")) {
        char *end = nullptr;
        long value = std::strtol(env, &end, 10);
        if (end != env && value > 0) {
            return static_cast<std::size_t>(value);
        }
    }
    return 8;
}

Eigen::MatrixXcd dense_matrix(const PauliOperator &p, std::size_t max_qubits) {
    const std::size_t n = p.num_qubits();
    if (n > max_qubits) {
        throw ResourceError("dense matrix of " + std::to_string(n) + " qubits exceeds cap " +
                            std::to_string(max_qubits));
    }
    // Basis index bit (n-1-q) holds qubit q.
    std::uint64_t xmask = 0;
    std::uint64_t zmask = 0;
    for (std::size_t q = 0; q < n; ++q) {
        std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
        if (p.x(q)) xmask |= bit;
        if (p.z(q)) zmask |= bit;
    }
    static const std::complex<double> kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    int base = p.phase_exp() + std::popcount(xmask & zmask);
    const std::size_t dim = std::size_t{1} << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t row = col ^ xmask;
        int k = base + 2 * (std::popcount(col & zmask) & 1);
        m(row, col) = kIPow[k & 3];
    }
    return m;
}

}  // namespace logicalnoise
