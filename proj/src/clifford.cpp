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

#include "qwig/clifford.hpp"

#include <cmath>
#include <numbers>

namespace qwig {

namespace {

constexpr double kSnapTol = 1e-8;
constexpr double kResidualTol = 1e-10;

int64_t snap_exponent(Cplx value, int64_t modulus, double tol, const char* what) {
    if (std::abs(std::abs(value) - 1.0) > tol)
        throw PhaseConsistencyError(std::string(what) + ": phase has non-unit modulus");
    double turns = std::arg(value) * double(modulus) / (2.0 * std::numbers::pi);
    int64_t k = mod_reduce(int64_t(std::llround(turns)), modulus);
    if (std::abs(value - root_of_unity(modulus, k)) > tol)
        throw PhaseConsistencyError(std::string(what) + ": phase is not a root of unity");
    return k;
}

std::vector<int64_t> index_digits(int64_t idx, int64_t d, int n) {
    std::vector<int64_t> digits(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        digits[size_t(i)] = idx % d;
        idx /= d;
    }
    return digits;
}

int64_t digits_index(const std::vector<int64_t>& digits, int64_t d) {
    int64_t idx = 0;
    for (int i = int(digits.size()) - 1; i >= 0; --i) idx = idx * d + digits[size_t(i)];
    return idx;
}

}  // namespace

PauliPoint CliffordGate::apply_s(const PauliPoint& a) const {
    return PauliPoint::from_flat(symplectic.apply(a.flat()), d());
}

int64_t CliffordGate::phi(const PauliPoint& a) const { return phase[size_t(a.index(d()))]; }

ModMatrix symplectic_inverse(const ModMatrix& s) {
    const int64_t d = s.modulus();
    const int n2 = s.rows();
    const int n = n2 / 2;
    // S^{-1} = Omega^{-1} S^T Omega with Omega = [[0, I], [-I, 0]].
    auto omega = [&](bool inverse) {
        ModMatrix o(n2, n2, d);
        for (int i = 0; i < n; ++i) {
            o.set(i, n + i, inverse ? -1 : 1);
            o.set(n + i, i, inverse ? 1 : -1);
        }
        return o;
    };
    ModMatrix st(n2, n2, d);
    for (int i = 0; i < n2; ++i)
        for (int j = 0; j < n2; ++j) st.set(i, j, s.at(j, i));
    ModMatrix oi = omega(true), o = omega(false);
    ModMatrix tmp(n2, n2, d), out(n2, n2, d);
    for (int i = 0; i < n2; ++i)
        for (int j = 0; j < n2; ++j) {
            int64_t acc = 0;
            for (int k = 0; k < n2; ++k) acc += st.at(i, k) * o.at(k, j);
            tmp.set(i, j, acc);
        }
    for (int i = 0; i < n2; ++i)
        for (int j = 0; j < n2; ++j) {
            int64_t acc = 0;
            for (int k = 0; k < n2; ++k) acc += oi.at(i, k) * tmp.at(k, j);
            out.set(i, j, acc);
        }
    return out;
}

CliffordGate extract_action(const Gauge& g, const CMat& u, const std::string& name) {
    const int64_t d = g.d();
    const int n = g.n();
    const int64_t dim = g.dim();
    if (u.rows() != dim || u.cols() != dim)
        throw ContractViolation("extract_action: matrix size does not match d^n");
    if (g.num_points() > 4096) throw ResourceLimit("extract_action: |E| > 4096");
    if ((u * u.adjoint() - CMat::Identity(dim, dim)).cwiseAbs().maxCoeff() > kResidualTol)
        throw ContractViolation("extract_action: matrix is not unitary");

    const CMat udag = u.adjoint();
    CliffordGate gate{name, u, ModMatrix(2 * n, 2 * n, d), std::vector<int64_t>(size_t(g.num_points()), 0)};

    auto conjugate_label = [&](const PauliPoint& a) -> std::pair<int64_t, PauliPoint> {
        CMat m = u * pauli_matrix(g, a) * udag;
        // Column 0 of T_b has its only entry at row b_x.
        Eigen::Index r0;
        m.col(0).cwiseAbs().maxCoeff(&r0);
        if (std::abs(std::abs(m(r0, 0)) - 1.0) > kSnapTol)
            throw NotClifford(name + ": conjugate of a Pauli is not a Pauli");
        PauliPoint b = PauliPoint::zero(n);
        b.x = index_digits(int64_t(r0), d, n);
        // Entry ratios along unit columns give omega^{b_z[i]}.
        for (int i = 0; i < n; ++i) {
            int64_t col = 1;
            for (int j = 0; j < i; ++j) col *= d;
            auto digits = index_digits(col, d, n);
            for (int j = 0; j < n; ++j) digits[size_t(j)] = mod_reduce(digits[size_t(j)] + b.x[size_t(j)], d);
            Cplx val = m(digits_index(digits, d), col);
            if (std::abs(std::abs(val) - 1.0) > kSnapTol)
                throw NotClifford(name + ": conjugate of a Pauli is not a Pauli");
            b.z[size_t(i)] = snap_exponent(val / m(r0, 0), d, kSnapTol, "extract_action");
        }
        Cplx lambda = m(r0, 0) / pauli_matrix(g, b)(r0, 0);
        int64_t j = snap_exponent(lambda, d, kSnapTol, name.c_str());
        if ((m - root_of_unity(d, j) * pauli_matrix(g, b)).cwiseAbs().maxCoeff() > kResidualTol)
            throw NotClifford(name + ": conjugation residual exceeds tolerance");
        return {j, b};
    };

    // Symplectic part from the images of the 2n generator labels.
    for (int col = 0; col < 2 * n; ++col) {
        PauliPoint e = col < n ? PauliPoint::z_unit(n, col) : PauliPoint::x_unit(n, col - n);
        auto [j, image] = conjugate_label(e);
        (void)j;
        auto f = image.flat();
        for (int row = 0; row < 2 * n; ++row) gate.symplectic.set(row, col, f[size_t(row)]);
    }
    // S must preserve the symplectic form.
    for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j) {
            PauliPoint a = PauliPoint::from_flat(
                [&] {
                    std::vector<int64_t> v(size_t(2 * n), 0);
                    v[size_t(i)] = 1;
                    return v;
                }(),
                d);
            PauliPoint b = PauliPoint::from_flat(
                [&] {
                    std::vector<int64_t> v(size_t(2 * n), 0);
                    v[size_t(j)] = 1;
                    return v;
                }(),
                d);
            if (symplectic_form(d, gate.apply_s(a), gate.apply_s(b)) != symplectic_form(d, a, b))
                throw NotClifford(name + ": extracted map is not symplectic");
        }

    // Full phase table, with the image consistency check S a = label(U T_a U^dag).
    for (int64_t idx = 0; idx < g.num_points(); ++idx) {
        PauliPoint a = PauliPoint::from_index(idx, d, n);
        auto [j, image] = conjugate_label(a);
        if (!(image == gate.apply_s(a)))
            throw NotClifford(name + ": conjugation images are not linear in the label");
        gate.phase[size_t(idx)] = j;
    }
    return gate;
}

CMat fourier_matrix(int64_t d) {
    CMat f(d, d);
    for (int64_t k = 0; k < d; ++k)
        for (int64_t l = 0; l < d; ++l) f(k, l) = root_of_unity(d, k * l) / std::sqrt(double(d));
    return f;
}

CMat phase_gate_matrix(const Gauge& g) {
    const int64_t d = g.d();
    CMat p = CMat::Zero(d, d);
    for (int64_t k = 0; k < d; ++k) p(k, k) = root_of_unity(g.phase_modulus(), k * k);
    return p;
}

CMat sum_gate_matrix(int64_t d, int n, int control, int target) {
    if (control == target) throw ContractViolation("sum_gate_matrix: control equals target");
    int64_t dim = 1;
    for (int i = 0; i < n; ++i) dim *= d;
    CMat m = CMat::Zero(dim, dim);
    for (int64_t col = 0; col < dim; ++col) {
        auto digits = index_digits(col, d, n);
        digits[size_t(target)] = mod_reduce(digits[size_t(target)] + digits[size_t(control)], d);
        m(digits_index(digits, d), col) = 1.0;
    }
    return m;
}

CMat embed_single(int64_t d, int n, const CMat& u1, int qudit) {
    int64_t dim = 1;
    for (int i = 0; i < n; ++i) dim *= d;
    CMat m = CMat::Zero(dim, dim);
    for (int64_t col = 0; col < dim; ++col) {
        auto digits = index_digits(col, d, n);
        int64_t c1 = digits[size_t(qudit)];
        for (int64_t r1 = 0; r1 < d; ++r1) {
            if (u1(r1, c1) == 0.0) continue;
            auto rd = digits;
            rd[size_t(qudit)] = r1;
            m(digits_index(rd, d), col) = u1(r1, c1);
        }
    }
    return m;
}

CliffordGate fourier_gate(const Gauge& g) {
    if (g.d() % 4 != 2) throw ContractViolation("fourier_gate: requires d = 4m + 2");
    CMat f = fourier_matrix(g.d());
    if (g.n() > 1) f = embed_single(g.d(), g.n(), f, 0);
    return extract_action(g, f, "fourier");
}

CliffordGate quadratic_gate(const Gauge& g) {
    const int64_t d = g.d();
    if (d % 4 != 0) throw ContractViolation("quadratic_gate: requires d = 4m");
    const int64_t m = d / 4;
    CMat u(d, d);
    for (int64_t k = 0; k < d; ++k)
        for (int64_t l = 0; l < d; ++l) {
            Cplx inner = 0;
            for (int64_t j = 0; j < d; ++j) inner += root_of_unity(d, m * j * j + (k - l) * j);
            u(k, l) = root_of_unity(d, m * k * k) * inner / double(d);
        }
    if ((u * u.adjoint() - CMat::Identity(d, d)).cwiseAbs().maxCoeff() > kResidualTol)
        throw InternalError("quadratic_gate: constructed matrix is not unitary");
    CMat full = g.n() > 1 ? embed_single(d, g.n(), u, 0) : u;
    return extract_action(g, full, "quadratic");
}

std::vector<CliffordGate> generator_set(const Gauge& g) {
    const int64_t d = g.d();
    const int n = g.n();
    if (g.dim() > 4096) throw ResourceLimit("generator_set: d^n > 4096");
    std::vector<CliffordGate> gates;
    gates.push_back(extract_action(g, CMat::Identity(g.dim(), g.dim()), "identity"));
    for (int q = 0; q < n; ++q) {
        gates.push_back(extract_action(g, embed_single(d, n, fourier_matrix(d), q),
                                       "fourier_" + std::to_string(q)));
        gates.push_back(extract_action(g, embed_single(d, n, phase_gate_matrix(g), q),
                                       "phase_" + std::to_string(q)));
        gates.push_back(extract_action(g, pauli_matrix(g, PauliPoint::x_unit(n, q)),
                                       "x_" + std::to_string(q)));
        gates.push_back(extract_action(g, pauli_matrix(g, PauliPoint::z_unit(n, q)),
                                       "z_" + std::to_string(q)));
    }
    for (int q = 0; q + 1 < n; ++q)
        gates.push_back(extract_action(g, sum_gate_matrix(d, n, q, q + 1),
                                       "sum_" + std::to_string(q) + std::to_string(q + 1)));
    if (d % 4 == 0) {
        CliffordGate quad = quadratic_gate(g);
        quad.name = "quadratic_0";
        gates.push_back(std::move(quad));
    }
    return gates;
}

int64_t phi_cov_eval(const CliffordGate& gate, const PauliPoint& a, const PauliPoint& b) {
    const int64_t d = gate.d();
    return mod_reduce(gate.phi(a) + gate.phi(b) - gate.phi(a.add(b, d)), d);
}

Chain apply_gate_to_chain(const CliffordGate& gate, const Chain& c) {
    Chain out(c.d(), c.n(), c.degree(), c.restricted());
    for (const auto& [key, coeff] : c.coefficients()) {
        auto pts = c.tuple_points(key);
        for (auto& p : pts) p = gate.apply_s(p);
        out.add(pts, coeff);
    }
    return out;
}

std::optional<Obstruction> find_obstruction(const Gauge& g,
                                            const std::vector<CliffordGate>& gates) {
    const int64_t d = g.d();
    const int64_t ne = g.num_points();
    if (ne > 4096) throw ResourceLimit("find_obstruction: |E| > 4096");
    for (const auto& gate : gates) {
        for (int64_t ia = 1; ia < ne; ++ia) {
            PauliPoint a = PauliPoint::from_index(ia, d, g.n());
            for (int64_t ib = 1; ib < ne; ++ib) {
                PauliPoint b = PauliPoint::from_index(ib, d, g.n());
                int64_t value = phi_cov_eval(gate, a, b);
                if (value == 0) continue;
                Chain df(d, g.n(), 1, false);
                df.add({a}, 1);
                df.add({b}, 1);
                df.add({a.add(b, d)}, -1);
                if (!(apply_gate_to_chain(gate, df) == df)) continue;
                return Obstruction{gate.name, a,
                                   b, gate.phi(a),
                                   gate.phi(b), gate.phi(a.add(b, d)),
                                   value};
            }
        }
    }
    return std::nullopt;
}

PhiCovDecision decide_phi_cov_trivial(const Gauge& g, const std::vector<CliffordGate>& gates) {
    const int64_t d = g.d();
    const int64_t ne = g.num_points();
    if (ne > 4096) throw ResourceLimit("decide_phi_cov_trivial: |E| > 4096; use find_obstruction");

    const int cols = int(ne - 1);
    RowReducer red(cols, d);
    std::vector<PauliPoint> pts;
    pts.reserve(size_t(ne));
    for (int64_t i = 0; i < ne; ++i) pts.push_back(PauliPoint::from_index(i, d, g.n()));

    auto add_unknown = [&](std::vector<int64_t>& row, int64_t idx, int64_t coeff) {
        if (idx != 0) row[size_t(idx - 1)] += coeff;
    };

    // Both sides of the pair equation are linear in the boundary d[a|b], and
    // boundaries with a unit second edge span all of them, so those rows give
    // an equivalent system. The witness re-check below still runs over every
    // pair.
    std::vector<PauliPoint> units;
    for (int q = 0; q < g.n(); ++q) {
        units.push_back(PauliPoint::z_unit(g.n(), q));
        units.push_back(PauliPoint::x_unit(g.n(), q));
    }
    for (const auto& gate : gates)
        for (int64_t ia = 0; ia < ne; ++ia)
            for (const PauliPoint& b : units) {
                const PauliPoint& a = pts[size_t(ia)];
                PauliPoint sum = a.add(b, d);
                std::vector<int64_t> row(size_t(cols), 0);
                add_unknown(row, ia, 1);
                add_unknown(row, b.index(d), 1);
                add_unknown(row, sum.index(d), -1);
                add_unknown(row, gate.apply_s(a).index(d), -1);
                add_unknown(row, gate.apply_s(b).index(d), -1);
                add_unknown(row, gate.apply_s(sum).index(d), 1);
                for (auto& v : row) v = mod_reduce(v, d);
                int64_t rhs = phi_cov_eval(gate, a, b);
                red.add_row(std::move(row), rhs);
            }

    auto [mat, rhs] = red.system();
    auto sol = mod_solve(mat, rhs);
    if (sol) {
        PhiCovDecision dec{Verdict::kTrivial, std::vector<int64_t>(size_t(ne), 0), std::nullopt, ""};
        for (int64_t i = 1; i < ne; ++i) dec.nu[size_t(i)] = (*sol)[size_t(i - 1)];
        // Re-check the defining relation on every (gate, pair).
        for (const auto& gate : gates)
            for (int64_t ia = 0; ia < ne; ++ia)
                for (int64_t ib = 0; ib < ne; ++ib) {
                    const PauliPoint &a = pts[size_t(ia)], &b = pts[size_t(ib)];
                    PauliPoint sum = a.add(b, d);
                    int64_t lhs = dec.nu[size_t(ia)] + dec.nu[size_t(ib)] -
                                  dec.nu[size_t(sum.index(d))] -
                                  dec.nu[size_t(gate.apply_s(a).index(d))] -
                                  dec.nu[size_t(gate.apply_s(b).index(d))] +
                                  dec.nu[size_t(gate.apply_s(sum).index(d))];
                    if (mod_reduce(lhs, d) != phi_cov_eval(gate, a, b))
                        throw InternalError("decide_phi_cov_trivial: witness fails re-check");
                }
        return dec;
    }
    if (auto obs = find_obstruction(g, gates))
        return PhiCovDecision{Verdict::kNontrivial, {}, std::move(obs), ""};
    return PhiCovDecision{Verdict::kNontrivial, {}, std::nullopt,
                          "system inconsistent but no single-face obstruction found"};
}

}  // namespace qwig
