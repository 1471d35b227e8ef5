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

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qwig/clifford.hpp"
#include "qwig/wigner.hpp"

namespace qwig {

/// Apply a gate only when an earlier outcome register holds `equals`.
struct Condition {
    int reg;
    int64_t equals;
};

struct GateStep {
    CliffordGate gate;
    std::optional<Condition> cond;
};

struct MeasureStep {
    PauliPoint a;
    int reg;
};

/// Clifford + Pauli-measurement circuit over a fixed gauge.
struct Circuit {
    Gauge gauge;
    std::vector<std::variant<GateStep, MeasureStep>> steps;

    int64_t d() const { return gauge.d(); }
    int n() const { return gauge.n(); }
    int num_registers() const;
};

/// Measurement-only decision tree. Each node measures T_label, reports
/// s = (measured - offset) mod d, stores s in its register, and descends
/// into children[s].
struct CompiledNode {
    PauliPoint label;
    int64_t offset = 0;
    int reg = 0;
    std::vector<std::unique_ptr<CompiledNode>> children;  // empty at a leaf
    bool leaf = true;
};

struct CompiledCircuit {
    Gauge gauge;
    int num_registers = 0;
    std::unique_ptr<CompiledNode> root;
};

/// Propagate every Clifford past the measurements: labels pull back through
/// S^{-1}, outcomes are shifted by the accumulated conjugation phase, and
/// conditioned gates are handled by branching on the reporting registers.
CompiledCircuit compile_measurement_only(const Circuit& c);

using Distribution = std::map<std::string, double>;

/// Dense Born-rule oracle with Lueders update; d^n <= 1024, measurements <= 6.
Distribution exact_distribution(const Circuit& c, const CMat& rho_in);

/// Same oracle on a compiled tree (for compilation equality checks).
Distribution exact_distribution(const CompiledCircuit& c, const CMat& rho_in);

/// Total variation distance between outcome distributions.
double total_variation(const Distribution& p, const Distribution& q);

/// Phase-space sampling under a positive representation (odd d):
/// draw v from W_in, outcomes are s = [a, v + x], update v <- v + k a.
Distribution simulate_sampling(const PhasePointBasis& basis, const CompiledCircuit& c,
                               const std::vector<double>& w_in, int64_t shots, uint64_t seed);

/// Circuit JSON: {"d":..,"n":..,"steps":[{"type":"gate","name":..|"matrix":..,
/// "targets":[..],"cond":{"reg":..,"equals":..}?} | {"type":"measure","a":[..],"reg":..}]}.
Circuit circuit_from_json(const std::string& text, const Gauge& gauge);

}  // namespace qwig
