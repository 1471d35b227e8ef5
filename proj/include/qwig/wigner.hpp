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
#include <vector>

#include "qwig/clifford.hpp"
#include "qwig/cohomology.hpp"
#include "qwig/pauli.hpp"

namespace qwig {

/// Coefficient family {c_b} of a Pauli-covariant phase-point-operator
/// ansatz A_v = d^{-n} sum_b omega^{-[v,b]} c_b T_b^dag.
/// Invariants: c_0 = 1, c_b != 0, and reality c_b^* = omega^{phi_{-b}(-1)} c_{-b}.
struct PhasePointBasis {
    Gauge gauge;
    std::vector<Cplx> c;  // dense over E by point index
    PauliPoint offset_x;  // the free parameter of the positive-representation family
};

PhasePointBasis make_basis(const Gauge& g, std::vector<Cplx> c, PauliPoint offset_x);

/// Gross construction: odd d, Gross gauge, c = 1.
PhasePointBasis gross_basis(int64_t d, int n);

CMat phase_point_operator(const PhasePointBasis& basis, const PauliPoint& v);

/// All A_v, indexed by phase-space point.
std::vector<CMat> all_phase_point_operators(const PhasePointBasis& basis);

struct WignerFunction {
    PhasePointBasis basis;
    std::vector<double> values;  // dense over V by point index
};

/// Expansion coefficients of rho in {A_v}, through the Gram system.
WignerFunction wigner_of(const PhasePointBasis& basis, const CMat& rho);

/// Covariance check: g(A_v) = A_{S_g v + a_g}; returns a_g or nullopt.
std::optional<PauliPoint> verify_covariance(const PhasePointBasis& basis, const CliffordGate& gate);

/// Effect function of the outcome-s projector of T_a.
struct ThetaEffect {
    PauliPoint a;
    int64_t s;
    std::vector<double> values;  // dense over V
};

ThetaEffect theta_effect(const PhasePointBasis& basis, const PauliPoint& a, int64_t s);

/// r-function certifying r_a + r_b - r_{a+b} = beta(a,b) on commuting pairs.
struct PositiveRepWitness {
    std::vector<int64_t> r;  // dense over E
    PauliPoint x;
};

struct PositiveRepResult {
    std::optional<PhasePointBasis> basis;
    std::optional<PositiveRepWitness> witness;
    BetaDecision decision;
};

/// Build the positively-representing basis when [beta] = 0; otherwise
/// return the nontriviality certificate.
PositiveRepResult construct_positive_rep(const Gauge& g);

/// Pi_{a,s} A_v Pi_{a,s} must expand with coefficients
/// delta_{s,[a,v+x]} * (1/d) on the orbit {v + k a}.
bool verify_positivity_preservation(const PhasePointBasis& basis, const PauliPoint& a);

/// Spectral side of the discrete Bochner criterion.
struct BochnerReport {
    std::vector<double> fhat;              // real part of the Fourier transform
    std::vector<double> eigen_residuals;   // |M nu_k - d fhat(k) nu_k|_inf per k
    double min_matrix_eigenvalue;
    bool fhat_nonnegative;
    bool matrix_psd;
};

/// f must satisfy f(-k) = f(k)^*. verdict = all fhat(k) >= -1e-10.
std::pair<BochnerReport, bool> bochner_check(const std::vector<Cplx>& f);

/// |c_b| = 1 for all b (necessary for positive representation).
bool check_magnitude_necessity(const PhasePointBasis& basis);

}  // namespace qwig
