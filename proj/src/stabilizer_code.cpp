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

#include "logicalnoise/stabilizer_code.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <optional>

#include "logicalnoise/errors.hpp"

namespace logicalnoise {

Syndrome::Syndrome(std::size_t length, std::uint64_t bits) : length_(length), bits_(bits) {
    if (length > 64 || (length < 64 && (bits >> length) != 0)) {
        throw DimensionError("syndrome bits exceed length " + std::to_string(length));
    }
}

Syndrome Syndrome::from_string(std::string_view text) {
    std::uint64_t bits = 0;
    for (std::size_t j = 0; j < text.size(); ++j) {
        if (text[j] == '1') {
            bits |= std::uint64_t{1} << j;
        } else if (text[j] != '0') {
            throw ValidationError("syndrome string must contain only 0 and 1: \"" + std::string(text) + "\"");
        }
    }
    return Syndrome(text.size(), bits);
}

std::string Syndrome::str() const {
    std::string out(length_, '0');
    for (std::size_t j = 0; j < length_; ++j) {
        if (bit(j)) out[j] = '1';
    }
    return out;
}

namespace {

/// GF(2) rank of symplectic rows (x | z).
std::size_t symplectic_rank(const std::vector<PauliOperator> &rows) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> m;
    m.reserve(rows.size());
    for (const auto &p : rows) m.emplace_back(p.x_bits(), p.z_bits());
    std::size_t rank = 0;
    for (int col = 0; col < 128 && rank < m.size(); ++col) {
        auto has = [col](const std::pair<std::uint64_t, std::uint64_t> &r) {
            return col < 64 ? ((r.first >> col) & 1u) : ((r.second >> (col - 64)) & 1u);
        };
        std::size_t pivot = rank;
        while (pivot < m.size() && !has(m[pivot])) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r != rank && has(m[r])) {
                m[r].first ^= m[rank].first;
                m[r].second ^= m[rank].second;
            }
        }
        ++rank;
    }
    return rank;
}

void require(bool ok, const std::string &what) {
    if (!ok) throw ValidationError(what);
}

}  // namespace

StabilizerCode::StabilizerCode(std::string name, std::size_t n, std::size_t k, std::size_t d,
                               std::vector<PauliOperator> generators, std::vector<PauliOperator> logical_x,
                               std::vector<PauliOperator> logical_z)
    : name_(std::move(name)),
      n_(n),
      k_(k),
      d_(d),
      generators_(std::move(generators)),
      logical_x_(std::move(logical_x)),
      logical_z_(std::move(logical_z)) {
    require(n_ >= 1 && n_ <= kMaxQubits, "code size n must be in [1, 64]");
    require(k_ >= 1 && k_ <= n_, "logical qubit count k must be in [1, n]");
    require(generators_.size() == n_ - k_, "expected n - k = " + std::to_string(n_ - k_) + " generators, got " +
                                               std::to_string(generators_.size()));
    require(logical_x_.size() == k_ && logical_z_.size() == k_, "expected k logical X and k logical Z operators");
    auto check_size = [this](const PauliOperator &p, const char *what) {
        if (p.num_qubits() != n_) {
            throw DimensionError(std::string(what) + " " + p.str() + " does not act on n = " + std::to_string(n_) +
                                 " qubits");
        }
    };
    for (const auto &g : generators_) {
        check_size(g, "generator");
        require(g.phase_exp() == 0, "generator " + g.str() + " must be unsigned (the group may not contain -I)");
    }
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        for (std::size_t j = i + 1; j < generators_.size(); ++j) {
            require(commutes(generators_[i], generators_[j]),
                    "generators " + generators_[i].str() + " and " + generators_[j].str() + " anticommute");
        }
    }
    require(symplectic_rank(generators_) == generators_.size(), "generators are not independent");
    for (std::size_t j = 0; j < k_; ++j) {
        for (const auto *ops : {&logical_x_, &logical_z_}) {
            const auto &l = (*ops)[j];
            check_size(l, "logical operator");
            require(l.is_hermitian(), "logical operator " + l.str() + " must be Hermitian");
            for (const auto &g : generators_) {
                require(commutes(l, g), "logical operator " + l.str() + " anticommutes with generator " + g.str());
            }
        }
        require(!commutes(logical_x_[j], logical_z_[j]),
                "logical X and Z of logical qubit " + std::to_string(j) + " must anticommute");
        for (std::size_t l = 0; l < k_; ++l) {
            if (l == j) continue;
            require(commutes(logical_x_[j], logical_x_[l]) && commutes(logical_x_[j], logical_z_[l]) &&
                        commutes(logical_z_[j], logical_z_[l]),
                    "logical operators of distinct logical qubits must commute");
        }
    }
}

std::uint64_t StabilizerCode::num_syndromes() const {
    if (num_checks() > kMaxCheckCount) {
        throw ResourceError("code has " + std::to_string(num_checks()) + " checks; enumeration cap is " +
                            std::to_string(kMaxCheckCount));
    }
    return std::uint64_t{1} << num_checks();
}

std::size_t StabilizerCode::logical_dim() const {
    if (k_ > kMaxLogicalQubits) {
        throw ResourceError("logical PTMs are capped at k = " + std::to_string(kMaxLogicalQubits));
    }
    return std::size_t{1} << (2 * k_);
}

PauliOperator StabilizerCode::stabilizer_element(std::uint64_t exponents) const {
    PauliOperator acc(n_);
    while (exponents != 0) {
        auto j = static_cast<std::size_t>(std::countr_zero(exponents));
        if (j >= generators_.size()) throw DimensionError("stabilizer exponent bits exceed generator count");
        acc = acc * generators_[j];
        exponents &= exponents - 1;
    }
    return acc;
}

PauliOperator StabilizerCode::logical_operator(std::size_t index) const {
    if (index >= logical_dim()) throw DimensionError("logical basis index out of range");
    PauliOperator acc(n_);
    for (std::size_t j = k_; j-- > 0;) {
        switch (static_cast<Pauli1>(index & 3u)) {
            case Pauli1::I:
                break;
            case Pauli1::X:
                acc = acc * logical_x_[j];
                break;
            case Pauli1::Y:
                acc = acc * (logical_x_[j] * logical_z_[j]).times_i(1);
                break;
            case Pauli1::Z:
                acc = acc * logical_z_[j];
                break;
        }
        index >>= 2;
    }
    return acc;
}

std::vector<PauliOperator> StabilizerCode::logical_basis() const {
    std::vector<PauliOperator> basis;
    const std::size_t dim = logical_dim();
    basis.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) basis.push_back(logical_operator(i));
    return basis;
}

namespace {

std::vector<PauliOperator> parse_all(std::initializer_list<const char *> strings) {
    std::vector<PauliOperator> out;
    for (const char *s : strings) out.push_back(PauliOperator::from_string(s));
    return out;
}

}  // namespace

StabilizerCode repetition_code(std::size_t n) {
    if (n < 3 || n % 2 == 0) {
        throw ValidationError("repetition code size must be odd and >= 3, got " + std::to_string(n));
    }
    std::vector<PauliOperator> gens;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        gens.push_back(PauliOperator::from_bits(n, 0, (std::uint64_t{3} << i)));
    }
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    return StabilizerCode("repetition:" + std::to_string(n), n, 1, 1, std::move(gens),
                          {PauliOperator::from_bits(n, all, 0)}, {PauliOperator::single(n, 0, Pauli1::Z)});
}

StabilizerCode five_qubit_code() {
    return StabilizerCode("five_qubit", 5, 1, 3, parse_all({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}),
                          parse_all({"XXXXX"}), parse_all({"ZZZZZ"}));
}

StabilizerCode steane_code() {
    return StabilizerCode("steane", 7, 1, 3,
                          parse_all({"IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"}),
                          parse_all({"XXXXXXX"}), parse_all({"ZZZZZZZ"}));
}

StabilizerCode trivial_code() { return StabilizerCode("trivial", 1, 1, 1, {}, parse_all({"X"}), parse_all({"Z"})); }

StabilizerCode builtin_code(std::string_view spec) {
    if (spec == "five_qubit") return five_qubit_code();
    if (spec == "steane") return steane_code();
    if (spec == "trivial") return trivial_code();
    constexpr std::string_view kRep = "repetition:";
    if (spec.starts_with(kRep)) {
        std::string_view digits = spec.substr(kRep.size());
        std::size_t n = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec != std::errc() || ptr != digits.data() + digits.size()) {
            throw ValidationError("bad repetition code size in \"" + std::string(spec) + "\"");
        }
        return repetition_code(n);
    }
    throw ValidationError("unknown builtin code \"" + std::string(spec) +
                          "\" (expected repetition:N, five_qubit, steane or trivial)");
}

StabilizerElements::StabilizerElements(const StabilizerCode &code) : code_(&code), count_(code.num_syndromes()) {}

StabilizerElements stabilizer_elements(const StabilizerCode &code) { return StabilizerElements(code); }

int phi_sign(std::uint64_t exponents, const Syndrome &s) {
    return (std::popcount(exponents & s.bits()) & 1) ? -1 : 1;
}

Syndrome syndrome_of(const StabilizerCode &code, const PauliOperator &error) {
    if (error.num_qubits() != code.n()) {
        throw DimensionError("error acts on " + std::to_string(error.num_qubits()) + " qubits, code has " +
                             std::to_string(code.n()));
    }
    std::uint64_t bits = 0;
    const auto &gens = code.generators();
    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (!commutes(gens[j], error)) bits |= std::uint64_t{1} << j;
    }
    return Syndrome(gens.size(), bits);
}

void for_each_pauli_of_weight(std::size_t n, std::size_t weight,
                              const std::function<void(const PauliOperator &)> &fn) {
    if (weight > n) return;
    if (weight == 0) {
        fn(PauliOperator(n));
        return;
    }
    std::vector<std::size_t> support(weight);
    for (std::size_t i = 0; i < weight; ++i) support[i] = i;
    std::vector<int> digit(weight);
    while (true) {
        std::fill(digit.begin(), digit.end(), 0);
        while (true) {
            std::uint64_t x = 0, z = 0;
            for (std::size_t i = 0; i < weight; ++i) {
                std::uint64_t bit = std::uint64_t{1} << support[i];
                // digit 0, 1, 2 -> X, Y, Z
                if (digit[i] <= 1) x |= bit;
                if (digit[i] >= 1) z |= bit;
            }
            fn(PauliOperator::from_bits(n, x, z));
            std::size_t i = 0;
            while (i < weight && ++digit[i] == 3) digit[i++] = 0;
            if (i == weight) break;
        }
        // Next combination in lexicographic order.
        std::size_t i = weight;
        while (i > 0 && support[i - 1] == n - weight + (i - 1)) --i;
        if (i == 0) break;
        ++support[i - 1];
        for (std::size_t j = i; j < weight; ++j) support[j] = support[j - 1] + 1;
    }
}

bool lexicographically_less(const PauliOperator &a, const PauliOperator &b) {
    std::uint64_t diff = (a.x_bits() ^ b.x_bits()) | (a.z_bits() ^ b.z_bits());
    if (diff == 0) return false;
    auto q = static_cast<std::size_t>(std::countr_zero(diff));
    return static_cast<int>(a.site(q)) < static_cast<int>(b.site(q));
}

namespace {

double binomial(std::size_t n, std::size_t k) {
    double v = 1.0;
    for (std::size_t i = 1; i <= k; ++i) v = v * static_cast<double>(n - k + i) / static_cast<double>(i);
    return v;
}

}  // namespace

std::optional<std::size_t> restricted_distance(const StabilizerCode &code, unsigned alphabet) {
    const std::size_t n = code.n();
    const int letters = std::popcount(alphabet & 0b1110u);
    if (letters == 0) return std::nullopt;
    double examined = 0.0;
    std::vector<PauliOperator> logicals = code.logical_x();
    logicals.insert(logicals.end(), code.logical_z().begin(), code.logical_z().end());
    for (std::size_t w = 1; w <= n; ++w) {
        examined += binomial(n, w) * std::pow(static_cast<double>(letters), static_cast<double>(w));
        if (examined > kDistanceSearchCap) {
            throw ResourceError("distance search for " + code.name() + " exceeds " +
                                std::to_string(static_cast<long long>(kDistanceSearchCap)) + " candidates");
        }
        bool found = false;
        for_each_pauli_of_weight(n, w, [&](const PauliOperator &p) {
            if (found) return;
            for (std::size_t q = 0; q < n; ++q) {
                auto site = static_cast<unsigned>(p.site(q));
                if (site != 0 && !((alphabet >> site) & 1u)) return;
            }
            if (!syndrome_of(code, p).is_trivial()) return;
            // A normalizer element lies in the stabilizer group iff it commutes
            // with every logical operator.
            for (const auto &l : logicals) {
                if (!commutes(p, l)) {
                    found = true;
                    return;
                }
            }
        });
        if (found) return w;
    }
    return std::nullopt;
}

std::size_t verify_distance(const StabilizerCode &code) {
    auto d = restricted_distance(code, 0b1110u);
    if (!d) throw ValidationError("code " + code.name() + " has no nontrivial logical operator");
    return *d;
}

PauliOperator recovery_for_syndrome(const StabilizerCode &code, const Syndrome &s) {
    if (s.length() != code.num_checks()) {
        throw DimensionError("syndrome length " + std::to_string(s.length()) + " does not match " +
                             std::to_string(code.num_checks()) + " checks");
    }
    for (std::size_t w = 0; w <= code.n(); ++w) {
        std::optional<PauliOperator> best;
        for_each_pauli_of_weight(code.n(), w, [&](const PauliOperator &p) {
            if (syndrome_of(code, p) == s && (!best || lexicographically_less(p, *best))) best = p;
        });
        if (best) return *best;
    }
    throw ValidationError("syndrome " + s.str() + " is unreachable");
}

RecoveryTable RecoveryTable::min_weight(const StabilizerCode &code) {
    const std::uint64_t count = code.num_syndromes();
    std::vector<std::optional<PauliOperator>> best(count);
    std::uint64_t filled = 0;
    for (std::size_t w = 0; w <= code.n() && filled < count; ++w) {
        std::vector<std::optional<PauliOperator>> level(count);
        for_each_pauli_of_weight(code.n(), w, [&](const PauliOperator &p) {
            std::uint64_t s = syndrome_of(code, p).bits();
            if (best[s]) return;
            if (!level[s] || lexicographically_less(p, *level[s])) level[s] = p;
        });
        for (std::uint64_t s = 0; s < count; ++s) {
            if (level[s]) {
                best[s] = level[s];
                ++filled;
            }
        }
    }
    std::vector<PauliOperator> table;
    table.reserve(count);
    for (std::uint64_t s = 0; s < count; ++s) {
        if (!best[s]) throw ValidationError("syndrome " + Syndrome(code.num_checks(), s).str() + " is unreachable");
        table.push_back(*best[s]);
    }
    return RecoveryTable(std::move(table));
}

RecoveryTable RecoveryTable::from_entries(const StabilizerCode &code,
                                          const std::map<std::uint64_t, PauliOperator> &entries) {
    const std::uint64_t count = code.num_syndromes();
    for (const auto &[bits, op] : entries) {
        if (bits >= count) throw ValidationError("recovery table has an entry for an invalid syndrome");
        Syndrome syn(code.num_checks(), bits);
        if (syndrome_of(code, op) != syn) {
            throw ValidationError("recovery " + op.str() + " does not produce syndrome " + syn.str());
        }
    }
    std::optional<RecoveryTable> fallback;
    if (entries.size() < count) fallback = min_weight(code);
    std::vector<PauliOperator> table;
    table.reserve(count);
    for (std::uint64_t s = 0; s < count; ++s) {
        auto it = entries.find(s);
        table.push_back(it != entries.end() ? it->second : fallback->table_[s]);
    }
    return RecoveryTable(std::move(table));
}

}  // namespace logicalnoise
