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

#include <complex>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "qwig/errors.hpp"
#include "qwig/modlinalg.hpp"

namespace qwig {

using Cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;

/// Label a = (a_Z, a_X) in E = Z_d^n x Z_d^n.
struct PauliPoint {
    std::vector<int64_t> z, x;

    int n() const { return int(z.size()); }
    bool operator==(const PauliPoint& o) const = default;

    static PauliPoint zero(int n) { return PauliPoint{std::vector<int64_t>(n, 0), std::vector<int64_t>(n, 0)}; }
    static PauliPoint z_unit(int n, int qudit, int64_t amount = 1);
    static PauliPoint x_unit(int n, int qudit, int64_t amount = 1);

    bool is_zero() const;
    PauliPoint add(const PauliPoint& o, int64_t d) const;
    PauliPoint sub(const PauliPoint& o, int64_t d) const;
    PauliPoint neg(int64_t d) const;
    PauliPoint scaled(int64_t k, int64_t d) const;

    /// Flat coordinates (z_0..z_{n-1}, x_0..x_{n-1}).
    std::vector<int64_t> flat() const;
    static PauliPoint from_flat(const std::vector<int64_t>& v, int64_t d);

    /// Mixed-radix index into E; inverse of from_index.
    int64_t index(int64_t d) const;
    static PauliPoint from_index(int64_t idx, int64_t d, int n);
};

/// [a, b] = a_Z . b_X - a_X . b_Z mod d.
int64_t symplectic_form(int64_t d, const PauliPoint& a, const PauliPoint& b);

/// Phase convention gamma : E -> Z_{scale*d}, scale = 1 (odd d) or 2 (even d).
/// Admissible gauges satisfy gamma(0) = 0 and, for even d, the parity
/// constraint gamma(a) = a_Z . a_X mod 2; these guarantee (T_a)^d = I.
class Gauge {
public:
    Gauge(int64_t d, int n);  // standard gauge for the parity of d

    int64_t d() const { return d_; }
    int n() const { return n_; }
    int64_t scale() const { return scale_; }
    int64_t phase_modulus() const { return scale_ * d_; }
    int64_t dim() const;             // d^n
    int64_t num_points() const;      // d^(2n)

    int64_t gamma(const PauliPoint& a) const;

    /// Override gamma at one point (checked for admissibility).
    void set_gamma(const PauliPoint& a, int64_t value);

    /// gamma' = gamma + scale * nu, nu given densely over E by index.
    Gauge shifted(const std::vector<int64_t>& nu) const;

    bool operator==(const Gauge& o) const = default;

private:
    int64_t d_;
    int n_;
    int64_t scale_;
    std::unordered_map<int64_t, int64_t> overrides_;

    int64_t base_gamma(const PauliPoint& a) const;
};

/// standard gauge: odd d uses gamma(a) = -2^{-1} a_Z . a_X (which makes
/// beta vanish identically); even d uses gamma(a) = a_Z . a_X over Z_{2d}.
Gauge standard_gauge(int64_t d, int n);

/// Group element mu^{phase_exp} Z(a_Z) X(a_X); phase_exp lives mod scale*d.
struct PauliOp {
    int64_t phase_exp = 0;
    PauliPoint point;

    static PauliOp labelled(const Gauge& g, const PauliPoint& a);  // T_a
};

/// Exact product in exponent arithmetic.
PauliOp pauli_product(const Gauge& g, const PauliOp& p, const PauliOp& q);

/// Dense matrix of op (d^n x d^n); requires d^n <= 4096.
CMat pauli_matrix(const Gauge& g, const PauliOp& op);
CMat pauli_matrix(const Gauge& g, const PauliPoint& a);  // T_a

/// T_a T_b = omega^{beta(a,b)} T_{a+b} for commuting labels.
int64_t beta(const Gauge& g, const PauliPoint& a, const PauliPoint& b);

/// (T_b)^k = omega^{phi_b(k)} T_{kb}.
int64_t phi_power(const Gauge& g, const PauliPoint& b, int64_t k);

/// Eigenprojector of T_a with eigenvalue omega^s.
CMat pauli_projector(const Gauge& g, const PauliPoint& a, int64_t s);

Cplx root_of_unity(int64_t modulus, int64_t exponent);

}  // namespace qwig
