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
#include <cstdint>
#include <functional>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logicalnoise/pauli.hpp"

namespace logicalnoise {

/// Cap on n - k for anything that enumerates the stabilizer group or all syndromes.
inline constexpr std::size_t kMaxCheckCount = 24;
/// Cap on the number of logical qubits (logical PTMs are 4^k x 4^k).
inline constexpr std::size_t kMaxLogicalQubits = 4;
/// Cap on Paulis examined by verify_distance.
inline constexpr double kDistanceSearchCap = 1e8;

/// Measurement outcomes s_j of the n - k generators; bit j of `bits()` is s_j.
class Syndrome {
   public:
    Syndrome(std::size_t length, std::uint64_t bits);

    /// "0110" with character j holding s_j.
    static Syndrome from_string(std::string_view text);

    std::size_t length() const { return length_; }
    std::uint64_t bits() const { return bits_; }
    bool bit(std::size_t j) const { return (bits_ >> j) & 1u; }
    bool is_trivial() const { return bits_ == 0; }
    std::string str() const;

    bool operator==(const Syndrome &other) const = default;

   private:
    std::size_t length_;
    std::uint64_t bits_;
};

/// A validated [[n, k, d]] stabilizer code with a chosen logical basis.
class StabilizerCode {
   public:
    /// Throws ValidationError unless: generators are unsigned, Hermitian,
    /// pairwise commuting and independent; every logical commutes with every
    /// generator; logical_x[j] anticommutes with logical_z[j] and commutes with
    /// all other logicals. `d` is stored as claimed and not re-derived.
    StabilizerCode(std::string name, std::size_t n, std::size_t k, std::size_t d,
                   std::vector<PauliOperator> generators, std::vector<PauliOperator> logical_x,
                   std::vector<PauliOperator> logical_z);

    const std::string &name() const { return name_; }
    std::size_t n() const { return n_; }
    std::size_t k() const { return k_; }
    std::size_t d() const { return d_; }
    std::size_t num_checks() const { return n_ - k_; }
    const std::vector<PauliOperator> &generators() const { return generators_; }
    const std::vector<PauliOperator> &logical_x() const { return logical_x_; }
    const std::vector<PauliOperator> &logical_z() const { return logical_z_; }

    /// 2^(n-k); throws ResourceError above kMaxCheckCount checks.
    std::uint64_t num_syndromes() const;
    /// 4^k; throws ResourceError above kMaxLogicalQubits.
    std::size_t logical_dim() const;

    /// prod_j g_j^(a_j) for generator exponent bits a.
    PauliOperator stabilizer_element(std::uint64_t exponents) const;

    /// Logical basis operator for base-4 index digits (I, X, Y, Z) per logical
    /// qubit, first logical qubit most significant. Y_j = i X_j Z_j, so every
    /// basis operator is Hermitian.
    PauliOperator logical_operator(std::size_t index) const;
    std::vector<PauliOperator> logical_basis() const;

   private:
    std::string name_;
    std::size_t n_;
    std::size_t k_;
    std::size_t d_;
    std::vector<PauliOperator> generators_;
    std::vector<PauliOperator> logical_x_;
    std::vector<PauliOperator> logical_z_;
};

/// Bit-flip repetition code: generators Z_i Z_{i+1}, logical X = X^n,
/// logical Z = Z_0. As a quantum code its distance is 1. Requires odd n >= 3.
StabilizerCode repetition_code(std::size_t n);
/// [[5,1,3]] with generators the cyclic shifts of XZZXI.
StabilizerCode five_qubit_code();
/// [[7,1,3]] Steane code.
StabilizerCode steane_code();
/// The unencoded qubit, [[1,1,1]] with no checks.
StabilizerCode trivial_code();

/// "repetition:N", "five_qubit", "steane", "trivial".
StabilizerCode builtin_code(std::string_view spec);

struct StabilizerElement {
    std::uint64_t exponents;
    PauliOperator element;
};

/// Lazily enumerates all 2^(n-k) stabilizer group elements in exponent order.
class StabilizerElements {
   public:
    class iterator {
       public:
        using value_type = StabilizerElement;
        using difference_type = std::ptrdiff_t;

        iterator(const StabilizerCode *code, std::uint64_t exponents) : code_(code), a_(exponents) {}
        StabilizerElement operator*() const { return {a_, code_->stabilizer_element(a_)}; }
        iterator &operator++() {
            ++a_;
            return *this;
        }
        iterator operator++(int) {
            auto copy = *this;
            ++a_;
            return copy;
        }
        bool operator==(const iterator &other) const { return a_ == other.a_; }

       private:
        const StabilizerCode *code_;
        std::uint64_t a_;
    };

    explicit StabilizerElements(const StabilizerCode &code);
    iterator begin() const { return {code_, 0}; }
    iterator end() const { return {code_, count_}; }
    std::uint64_t size() const { return count_; }

   private:
    const StabilizerCode *code_;
    std::uint64_t count_;
};

StabilizerElements stabilizer_elements(const StabilizerCode &code);

/// Sign of the stabilizer element with exponents a in the expansion of the
/// syndrome projector: (-1)^(a . s).
int phi_sign(std::uint64_t exponents, const Syndrome &s);

/// Bit j set iff `error` anticommutes with generator j.
Syndrome syndrome_of(const StabilizerCode &code, const PauliOperator &error);

/// Minimum weight of a Pauli with trivial syndrome that acts nontrivially on
/// the code space. Throws ResourceError when the search would exceed
/// kDistanceSearchCap candidates.
std::size_t verify_distance(const StabilizerCode &code);

/// verify_distance over Paulis whose single-qubit factors all lie in
/// `alphabet` (bit 1 = X, bit 2 = Y, bit 3 = Z); nullopt when no such Pauli
/// acts nontrivially on the code space.
std::optional<std::size_t> restricted_distance(const StabilizerCode &code, unsigned alphabet);

/// Minimum-weight Pauli with syndrome `s`, ties broken by lexicographic order
/// of the Pauli string with I < X < Y < Z.
PauliOperator recovery_for_syndrome(const StabilizerCode &code, const Syndrome &s);

/// True if a is lexicographically before b as I/X/Y/Z strings.
bool lexicographically_less(const PauliOperator &a, const PauliOperator &b);

/// Calls `fn` for every Pauli on n qubits with exactly `weight` non-identity sites.
void for_each_pauli_of_weight(std::size_t n, std::size_t weight, const std::function<void(const PauliOperator &)> &fn);

/// Syndrome -> recovery Pauli lookup.
class RecoveryTable {
   public:
    /// Minimum-weight, lexicographic tie-break table for every syndrome.
    static RecoveryTable min_weight(const StabilizerCode &code);

    /// Custom decoder. Each Pauli must produce its syndrome (ValidationError
    /// otherwise); syndromes without an entry use the min_weight choice.
    static RecoveryTable from_entries(const StabilizerCode &code, const std::map<std::uint64_t, PauliOperator> &entries);

    const PauliOperator &operator[](const Syndrome &s) const { return table_.at(s.bits()); }
    std::size_t size() const { return table_.size(); }

   private:
    explicit RecoveryTable(std::vector<PauliOperator> table) : table_(std::move(table)) {}
    std::vector<PauliOperator> table_;
};

}  // namespace logicalnoise
