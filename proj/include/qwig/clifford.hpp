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

#include <optional>
#include <string>
#include <vector>

#include "qwig/cohomology.hpp"
#include "qwig/pauli.hpp"

namespace qwig {

/// Clifford unitary with its conjugation data:
/// U T_a U^dag = omega^{phase(a)} T_{S a}.
struct CliffordGate {
    std::string name;
    CMat unitary;
    ModMatrix symplectic;        // 2n x 2n over Z_d, acting on (z|x) coordinates
    std::vector<int64_t> phase;  // Phi-tilde, dense over E by point index

    int64_t d() const { return symplectic.modulus(); }
    int n() const { return symplectic.rows() / 2; }

    PauliPoint apply_s(const PauliPoint& a) const;
    int64_t phi(const PauliPoint& a) const;
};

/// Witness of [Phi_cov] != 0: g fixes the boundary of the face [u|v] as a
/// chain but shifts its phase.
struct Obstruction {
    std::string gate_name;
    PauliPoint u, v;
    int64_t phi_u, phi_v, phi_sum;  // conjugation phases on u, v, u+v
    int64_t boundary_value;         // Phi-tilde(d[u|v]) != 0
};

/// Read (S, Phi-tilde) off dense conjugation and verify both invariants.
CliffordGate extract_action(const Gauge& g, const CMat& u, const std::string& name = "gate");

/// Raw gate matrices (single qudit unless stated).
CMat fourier_matrix(int64_t d);
CMat phase_gate_matrix(const Gauge& g);  // diag(mu^{k^2})
CMat sum_gate_matrix(int64_t d, int n, int control, int target);
CMat embed_single(int64_t d, int n, const CMat& u1, int qudit);

/// Fourier transform as a verified gate; d = 4m+2 (the Lemma-for-even-d family).
CliffordGate fourier_gate(const Gauge& g);

/// Quadratic-Gauss-sum gate for d = 4m; unitarity is asserted, not repaired.
CliffordGate quadratic_gate(const Gauge& g);

/// Standard generating set: identity, Fourier and phase gate per qudit, SUM
/// on adjacent pairs, Pauli X/Z per qudit; for d = 0 mod 4 also the
/// quadratic gate (the Fourier already covers d = 2 mod 4).
std::vector<CliffordGate> generator_set(const Gauge& g);

/// Phi-tilde_g(d[a|b]) = phi(a) + phi(b) - phi(a+b).
int64_t phi_cov_eval(const CliffordGate& gate, const PauliPoint& a, const PauliPoint& b);

/// Image of a chain under S_g (edge-wise relabeling).
Chain apply_gate_to_chain(const CliffordGate& gate, const Chain& c);

/// First (gate, [a|b]) in canonical order with g df = df and value != 0.
std::optional<Obstruction> find_obstruction(const Gauge& g, const std::vector<CliffordGate>& gates);

/// Outcome of the [Phi_cov] = 0 decision relative to a generating set.
struct PhiCovDecision {
    Verdict verdict;
    std::vector<int64_t> nu;  // TRIVIAL: Phi_cov = d^h(nu) on boundaries, dense over E
    std::optional<Obstruction> obstruction;  // NONTRIVIAL
    std::string detail;
};

PhiCovDecision decide_phi_cov_trivial(const Gauge& g, const std::vector<CliffordGate>& gates);

/// S^{-1} through the symplectic structure (no solving).
ModMatrix symplectic_inverse(const ModMatrix& s);

}  // namespace qwig
