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

#include <stdexcept>
#include <string>

namespace logicalnoise {

/// Mismatched qubit counts, matrix sizes or syndrome lengths.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An input violates a documented invariant (non-CPTP channel, bad code, bad parameter).
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A computation would exceed a configured size cap.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A Pauli product carries a phase of +-i where a Hermitian operator was required.
struct NonHermitianError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace logicalnoise
