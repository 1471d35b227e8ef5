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

#include <random>

#include "qwig/pauli.hpp"

namespace qwig::testutil {

inline bool mat_near(const CMat& a, const CMat& b, double tol = 1e-10) {
    return a.rows() == b.rows() && a.cols() == b.cols() && (a - b).cwiseAbs().maxCoeff() < tol;
}

/// Phase exponent j with M = omega^j N, or -1 when no such j exists.
/// Independent of the closed-form exponent arithmetic under test.
inline int64_t dense_omega_power(const CMat& m, const CMat& n, int64_t d, double tol = 1e-10) {
    Eigen::Index r, c;
    n.cwiseAbs().maxCoeff(&r, &c);
    Cplx ratio = m(r, c) / n(r, c);
    for (int64_t j = 0; j < d; ++j)
        if (std::abs(ratio - root_of_unity(d, j)) < 1e-6 && mat_near(m, root_of_unity(d, j) * n, tol))
            return j;
    return -1;
}

inline PauliPoint random_point(std::mt19937_64& rng, int64_t d, int n) {
    std::uniform_int_distribution<int64_t> pick(0, d - 1);
    PauliPoint p = PauliPoint::zero(n);
    for (auto& v : p.z) v = pick(rng);
    for (auto& v : p.x) v = pick(rng);
    return p;
}

inline std::vector<int64_t> random_nu(std::mt19937_64& rng, const Gauge& g) {
    std::uniform_int_distribution<int64_t> pick(0, g.d() - 1);
    std::vector<int64_t> nu(size_t(g.num_points()));
    for (auto& v : nu) v = pick(rng);
    nu[0] = 0;
    return nu;
}

inline CMat random_unit_matrix(std::mt19937_64& rng, int64_t dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMat m(dim, dim);
    for (int64_t r = 0; r < dim; ++r)
        for (int64_t c = 0; c < dim; ++c) m(r, c) = Cplx(gauss(rng), gauss(rng));
    return m;
}

inline CMat random_density_matrix(std::mt19937_64& rng, int64_t dim) {
    CMat m = random_unit_matrix(rng, dim);
    CMat rho = m * m.adjoint();
    return rho / rho.trace().real();
}

inline CMat random_hermitian(std::mt19937_64& rng, int64_t dim) {
    CMat m = random_unit_matrix(rng, dim);
    return (m + m.adjoint()) / 2.0;
}

}  // namespace qwig::testutil
