// Copyright 2026 The qwig Authors
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

namespace qwig {

/// Violated precondition or malformed argument.
struct ContractViolation : std::invalid_argument {
    explicit ContractViolation(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Problem size exceeds the configured desk-scale limits.
struct ResourceLimit : std::runtime_error {
    explicit ResourceLimit(const std::string& msg) : std::runtime_error(msg) {}
};

/// A unitary that does not normalize the Pauli group.
struct NotClifford : std::runtime_error {
    explicit NotClifford(const std::string& msg) : std::runtime_error(msg) {}
};

/// A conjugation phase that is not a power of omega.
struct PhaseConsistencyError : std::runtime_error {
    explicit PhaseConsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operator family failed to span (or uniquely span) an operator basis.
struct NotABasis : std::runtime_error {
    explicit NotABasis(const std::string& msg) : std::runtime_error(msg) {}
};

/// An identity that is a theorem failed; indicates a bug, not bad input.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace qwig
