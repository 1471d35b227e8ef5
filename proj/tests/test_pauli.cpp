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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace qwig;
using namespace qwig::testutil;

namespace {

PauliPoint pt1(int64_t z, int64_t x) { return PauliPoint{{z}, {x}}; }

// beta read off dense matrices: T_a T_b = omega^j T_{a+b}.
int64_t dense_beta(const Gauge& g, const PauliPoint& a, const PauliPoint& b) {
    CMat prod = pauli_matrix(g, a) * pauli_matrix(g, b);
    CMat target = pauli_matrix(g, a.add(b, g.d()));
    return dense_omega_power(prod, target, g.d());
}

}  // namespace

TEST_CASE("symplectic form evaluates the defining formula") {
    CHECK(symplectic_form(2, pt1(1, 0), pt1(0, 1)) == 1);
    CHECK(symplectic_form(4, pt1(1, 0), pt1(1, 2)) == 2);
    std::mt19937_64 rng(3);
    for (int64_t d : {2, 3, 4, 6})
        for (int it = 0; it < 50; ++it) {
            PauliPoint a = random_point(rng, d, 2), b = random_point(rng, d, 2);
            CHECK(symplectic_form(d, a, a) == 0);  // antisymmetry on the diagonal
            CHECK(mod_reduce(symplectic_form(d, a, b) + symplectic_form(d, b, a), d) == 0);
        }
    CHECK_THROWS_AS(symplectic_form(3, pt1(0, 0), PauliPoint::zero(2)), ContractViolation);
}

TEST_CASE("standard gauge values") {
    Gauge g3 = standard_gauge(3, 1);
    CHECK(g3.gamma(pt1(1, 1)) == 1);  // -2^{-1} = -2 = 1 mod 3
    CHECK(g3.gamma(PauliPoint::zero(1)) == 0);
    Gauge g2 = standard_gauge(2, 1);
    CHECK(g2.gamma(pt1(1, 1)) == 1);
    CHECK(g2.gamma(PauliPoint::zero(1)) == 0);
    CHECK_THROWS_AS(standard_gauge(1, 1), ContractViolation);
}

TEST_CASE("dense single-qudit matrices match the defining action") {
    Gauge g2 = standard_gauge(2, 1);
    CMat z2 = pauli_matrix(g2, pt1(1, 0));
    CHECK(mat_near(z2, (CMat(2, 2) << 1, 0, 0, -1).finished()));

    Gauge g3 = standard_gauge(3, 1);
    CMat x3 = pauli_matrix(g3, pt1(0, 1));
    CMat expected = CMat::Zero(3, 3);
    expected(1, 0) = expected(2, 1) = expected(0, 2) = 1;  // |k> -> |k+1 mod 3>
    CHECK(mat_near(x3, expected));
}

TEST_CASE("mu ZX at d=2 is the dense product of i, Z and X") {
    // Oracle: multiply i * Z * X densely; the label (1,1) with phase 1 is that
    // product, which is -Y in the usual basis.
    Gauge g = standard_gauge(2, 1);
    CMat z = pauli_matrix(g, pt1(1, 0)), x = pauli_matrix(g, pt1(0, 1));
    CMat izx = Cplx(0, 1) * z * x;
    CHECK(mat_near(pauli_matrix(g, PauliOp{1, pt1(1, 1)}), izx));
    CHECK(mat_near(izx * izx, CMat::Identity(2, 2)));  // (T_{a_Y})^2 = I
}

TEST_CASE("pauli matrices are unitary and satisfy (T_a)^d = I") {
    std::mt19937_64 rng(5);
    for (int64_t d : {2, 3, 4, 5, 6})
        for (int n = 1; n <= 2; ++n) {
            Gauge g = standard_gauge(d, n);
            Gauge shifted = g.shifted(random_nu(rng, g));
            for (int it = 0; it < 8; ++it) {
                PauliPoint a = random_point(rng, d, n);
                for (const Gauge& gauge : {g, shifted}) {
                    CMat t = pauli_matrix(gauge, a);
                    CHECK(mat_near(t * t.adjoint(), CMat::Identity(t.rows(), t.cols())));
                    CMat p = CMat::Identity(t.rows(), t.cols());
                    for (int64_t k = 0; k < d; ++k) p = p * t;
                    CHECK(mat_near(p, CMat::Identity(t.rows(), t.cols())));
                }
            }
        }
}

TEST_CASE("commutation relation T_a T_b = omega^{[a,b]} T_b T_a") {
    std::mt19937_64 rng(7);
    for (int64_t d : {2, 3, 4, 6})
        for (int it = 0; it < 12; ++it) {
            Gauge g = standard_gauge(d, 2);
            PauliPoint a = random_point(rng, d, 2), b = random_point(rng, d, 2);
            CMat lhs = pauli_matrix(g, a) * pauli_matrix(g, b);
            CMat rhs = pauli_matrix(g, b) * pauli_matrix(g, a);
            CHECK(dense_omega_power(lhs, rhs, d) == symplectic_form(d, a, b));
        }
}

TEST_CASE("beta matches the dense-multiplication oracle") {
    std::mt19937_64 rng(11);
    for (int64_t d : {2, 3, 4, 6})
        for (int n = 1; n <= 2; ++n) {
            Gauge g = standard_gauge(d, n);
            const int64_t ne = g.num_points();
            if (ne <= 256) {
                for (int64_t ia = 0; ia < ne; ++ia)
                    for (int64_t ib = 0; ib < ne; ++ib) {
                        PauliPoint a = PauliPoint::from_index(ia, d, n);
                        PauliPoint b = PauliPoint::from_index(ib, d, n);
                        if (symplectic_form(d, a, b) != 0) continue;
                        CHECK(beta(g, a, b) == dense_beta(g, a, b));
                    }
            } else {
                int done = 0;
                while (done < 300) {
                    PauliPoint a = random_point(rng, d, n), b = random_point(rng, d, n);
                    if (symplectic_form(d, a, b) != 0) continue;
                    CHECK(beta(g, a, b) == dense_beta(g, a, b));
                    ++done;
                }
            }
        }
}

TEST_CASE("beta also matches the oracle in randomly shifted gauges") {
    std::mt19937_64 rng(13);
    for (int64_t d : {2, 3, 4})
        for (int it = 0; it < 3; ++it) {
            Gauge g = standard_gauge(d, 1).shifted(random_nu(rng, standard_gauge(d, 1)));
            const int64_t ne = d * d;
            for (int64_t ia = 0; ia < ne; ++ia)
                for (int64_t ib = 0; ib < ne; ++ib) {
                    PauliPoint a = PauliPoint::from_index(ia, d, 1);
                    PauliPoint b = PauliPoint::from_index(ib, d, 1);
                    if (symplectic_form(d, a, b) != 0) continue;
                    CHECK(beta(g, a, b) == dense_beta(g, a, b));
                }
        }
}

TEST_CASE("beta vanishes identically in the Gross gauge for odd d") {
    for (auto [d, n] : std::vector<std::pair<int64_t, int>>{{3, 1}, {3, 2}, {5, 1}}) {
        Gauge g = standard_gauge(d, n);
        const int64_t ne = g.num_points();
        for (int64_t ia = 0; ia < ne; ++ia)
            for (int64_t ib = 0; ib < ne; ++ib) {
                PauliPoint a = PauliPoint::from_index(ia, d, n);
                PauliPoint b = PauliPoint::from_index(ib, d, n);
                if (symplectic_form(d, a, b) != 0) continue;
                CHECK(beta(g, a, b) == 0);
            }
    }
}

TEST_CASE("beta(a, 0) = 0 in every gauge") {
    std::mt19937_64 rng(17);
    for (int64_t d : {2, 3, 4, 6}) {
        Gauge g = standard_gauge(d, 1).shifted(random_nu(rng, standard_gauge(d, 1)));
        for (int it = 0; it < 10; ++it)
            CHECK(beta(g, random_point(rng, d, 1), PauliPoint::zero(1)) == 0);
    }
}

TEST_CASE("gauge shifts move beta by the coboundary of nu") {
    std::mt19937_64 rng(19);
    for (int64_t d : {2, 3, 4, 6})
        for (int n = 1; n <= 2; ++n) {
            Gauge g = standard_gauge(d, n);
            auto nu = random_nu(rng, g);
            Gauge shifted = g.shifted(nu);
            for (int it = 0; it < 40; ++it) {
                PauliPoint a = random_point(rng, d, n), b = random_point(rng, d, n);
                if (symplectic_form(d, a, b) != 0) continue;
                int64_t expected = mod_reduce(beta(g, a, b) + nu[size_t(a.index(d))] +
                                                  nu[size_t(b.index(d))] -
                                                  nu[size_t(a.add(b, d).index(d))],
                                              d);
                CHECK(beta(shifted, a, b) == expected);
            }
        }
}

TEST_CASE("beta rejects non-commuting labels") {
    Gauge g = standard_gauge(2, 1);
    CHECK_THROWS_AS(beta(g, pt1(1, 0), pt1(0, 1)), ContractViolation);
}

TEST_CASE("phi_power basics and the d=2 Y label") {
    Gauge g2 = standard_gauge(2, 1);
    for (int64_t idx = 0; idx < 4; ++idx) {
        PauliPoint b = PauliPoint::from_index(idx, 2, 1);
        CHECK(phi_power(g2, b, 0) == 0);
        CHECK(phi_power(g2, b, 1) == 0);
    }
    // (T_{(1,1)})^2 = I, dense; the exponent for k = 2 = 0 mod 2 is 0.
    PauliPoint y = pt1(1, 1);
    CHECK(phi_power(g2, y, 2) == 0);
    CMat t = pauli_matrix(g2, y);
    CHECK(mat_near(t * t, CMat::Identity(2, 2)));
}

TEST_CASE("phi_power matches the dense power oracle") {
    std::mt19937_64 rng(23);
    for (int64_t d : {2, 3, 4, 6}) {
        Gauge g = standard_gauge(d, 1);
        for (int64_t idx = 0; idx < d * d; ++idx) {
            PauliPoint b = PauliPoint::from_index(idx, d, 1);
            CMat t = pauli_matrix(g, b);
            CMat p = CMat::Identity(d, d);
            for (int64_t k = 0; k < d; ++k) {
                CMat target = pauli_matrix(g, b.scaled(k, d));
                CHECK(dense_omega_power(p, target, d) == phi_power(g, b, k));
                p = p * t;
            }
        }
    }
}

TEST_CASE("phi identities Asym and Asso hold exhaustively for small systems") {
    for (int64_t d : {2, 3, 4, 5, 6}) {
        Gauge g = standard_gauge(d, 1);
        for (int64_t idx = 0; idx < d * d; ++idx) {
            PauliPoint b = PauliPoint::from_index(idx, d, 1);
            PauliPoint nb = b.neg(d);
            CHECK(phi_power(g, b, d - 1) == phi_power(g, nb, d - 1));  // phi_b(-1) = phi_{-b}(-1)
            for (int64_t k = 0; k < d; ++k) {
                int64_t lhs = phi_power(g, b, mod_reduce(-k, d));
                int64_t rhs = mod_reduce(phi_power(g, b.scaled(k, d), d - 1) - phi_power(g, b, k), d);
                CHECK(lhs == rhs);  // phi_b(-k) = phi_{kb}(-1) - phi_b(k)
            }
        }
    }
}

TEST_CASE("phi vanishes in the Gross gauge at odd d") {
    Gauge g = standard_gauge(3, 1);
    for (int64_t idx = 0; idx < 9; ++idx)
        for (int64_t k = 0; k < 3; ++k)
            CHECK(phi_power(g, PauliPoint::from_index(idx, 3, 1), k) == 0);
}

TEST_CASE("pauli projectors resolve the identity and project") {
    std::mt19937_64 rng(29);
    for (int64_t d : {2, 3, 4}) {
        Gauge g = standard_gauge(d, 1);
        for (int it = 0; it < 6; ++it) {
            PauliPoint a = random_point(rng, d, 1);
            CMat t = pauli_matrix(g, a);
            CMat sum = CMat::Zero(d, d);
            for (int64_t s = 0; s < d; ++s) {
                CMat proj = pauli_projector(g, a, s);
                sum += proj;
                CHECK(mat_near(proj * proj, proj));
                CHECK(mat_near(t * proj, root_of_unity(d, s) * proj));
            }
            CHECK(mat_near(sum, CMat::Identity(d, d)));
        }
    }
}

TEST_CASE("gauge admissibility is enforced") {
    Gauge g = standard_gauge(2, 1);
    CHECK_THROWS_AS(g.set_gamma(PauliPoint::zero(1), 1), ContractViolation);
    CHECK_THROWS_AS(g.set_gamma(pt1(1, 1), 2), ContractViolation);  // parity
    g.set_gamma(pt1(1, 1), 3);  // admissible alternative
    CHECK(g.gamma(pt1(1, 1)) == 3);
    CMat t = pauli_matrix(g, pt1(1, 1));
    CHECK(mat_near(t * t, CMat::Identity(2, 2)));
}

TEST_CASE("pauli ops index round trip") {
    for (int64_t d : {2, 3, 6})
        for (int n = 1; n <= 2; ++n)
            for (int64_t idx = 0; idx < d * d * (n == 2 ? d * d : 1); ++idx) {
                PauliPoint p = PauliPoint::from_index(idx, d, n);
                CHECK(p.index(d) == idx);
                CHECK(PauliPoint::from_flat(p.flat(), d) == p);
            }
}
