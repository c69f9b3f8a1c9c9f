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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace logicalnoise {

/// Largest supported qubit count. One 64-bit word per bit row.
inline constexpr std::size_t kMaxQubits = 64;

/// Per-site Pauli index in basis order (I, X, Y, Z) = (0, 1, 2, 3).
enum class Pauli1 : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// An n-qubit Pauli operator i^phase_exp * P, where P is a tensor product of
/// I, X, Y, Z with Y the Hermitian Y = [[0, -i], [i, 0]].
///
/// Bits are stored in symplectic form: site q carries X if x bit q is set and Z
/// if z bit q is set; both set means Y. Qubit 0 is the leftmost character of
/// the string form and the most significant tensor factor of the dense matrix.
class PauliOperator {
   public:
    /// Identity on `num_qubits` qubits.
    explicit PauliOperator(std::size_t num_qubits);

    static PauliOperator from_bits(std::size_t num_qubits, std::uint64_t x_bits, std::uint64_t z_bits,
                                   int phase_exp = 0);

    /// Parses "XIZ", "+XYZ", "-ZZ" (ASCII '-' or U+2212), and "+iX"/"-iX".
    static PauliOperator from_string(std::string_view text);

    /// A single-site operator `which` on qubit `qubit`, identity elsewhere.
    static PauliOperator single(std::size_t num_qubits, std::size_t qubit, Pauli1 which);

    std::size_t num_qubits() const { return num_qubits_; }
    std::uint64_t x_bits() const { return x_; }
    std::uint64_t z_bits() const { return z_; }
    int phase_exp() const { return phase_; }

    bool x(std::size_t qubit) const { return (x_ >> qubit) & 1u; }
    bool z(std::size_t qubit) const { return (z_ >> qubit) & 1u; }
    Pauli1 site(std::size_t qubit) const;

    /// Same canonical representative, phase multiplied by i^k.
    PauliOperator times_i(int k) const;

    /// Drops the phase, leaving the canonical representative.
    PauliOperator representative() const { return from_bits(num_qubits_, x_, z_, 0); }

    bool is_hermitian() const { return (phase_ & 1) == 0; }

    /// "+XIZ", "-Y", "+iX", "-iZZ".
    std::string str() const;

    bool operator==(const PauliOperator &other) const = default;

   private:
    PauliOperator(std::size_t n, std::uint64_t x, std::uint64_t z, int phase);

    std::size_t num_qubits_;
    std::uint64_t x_;
    std::uint64_t z_;
    int phase_;
};

/// Exact group product p * q including the accumulated power of i.
PauliOperator multiply(const PauliOperator &p, const PauliOperator &q);

inline PauliOperator operator*(const PauliOperator &p, const PauliOperator &q) { return multiply(p, q); }

/// Number of qubits acted on nontrivially.
std::size_t weight(const PauliOperator &p);

/// True iff the symplectic form x_p.z_q + z_p.x_q vanishes mod 2.
bool commutes(const PauliOperator &p, const PauliOperator &q);

/// Sign of a Hermitian Pauli relative to its canonical representative.
/// Throws NonHermitianError for phase_exp 1 or 3.
int chi_sign(const PauliOperator &p);

/// The Pauli whose per-site indices (I, X, Y, Z) = (0..3) are the base-4
/// digits of `index`, qubit 0 most significant.
PauliOperator pauli_from_basis_index(std::size_t num_qubits, std::size_t index);

/// Dense-matrix qubit cap: LOGICALNOISE_MAX_N if set, otherwise 8.
std::size_t dense_qubit_cap();

/// Exact 2^n x 2^n matrix of p, including i^phase_exp. Throws ResourceError
/// when n exceeds `max_qubits`.
Eigen::MatrixXcd dense_matrix(const PauliOperator &p, std::size_t max_qubits = dense_qubit_cap());

}  // namespace logicalnoise
