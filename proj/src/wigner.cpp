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

#include "qwig/wigner.hpp"

#include <cmath>

namespace qwig {

namespace {

constexpr double kEqTol = 1e-10;
constexpr double kMatchTol = 1e-8;
constexpr double kThetaRealTol = 1e-12;

struct SparsePauli {
    // T_b^dag has one entry per column; store per column c: (row, value).
    std::vector<int64_t> row;
    std::vector<Cplx> val;
};

// T_b^dag column structure: (T_b)_{r,c} nonzero at r = c + b_x, so
// (T_b^dag)_{c, r} = conj. Stored per column of T_b^dag.
SparsePauli sparse_dagger(const Gauge& g, const PauliPoint& b) {
    CMat t = pauli_matrix(g, b);
    const int64_t dim = g.dim();
    SparsePauli s;
    s.row.resize(size_t(dim));
    s.val.resize(size_t(dim));
    for (int64_t c = 0; c < dim; ++c) {
        Eigen::Index r;
        t.col(c).cwiseAbs().maxCoeff(&r);
        // dagger: entry (c, r) of T^dag equals conj(T(r, c)); column of T^dag = r.
        s.row[size_t(r)] = c;
        s.val[size_t(r)] = std::conj(t(r, c));
    }
    return s;
}

Eigen::FullPivLU<CMat> gram_lu(const std::vector<CMat>& ops) {
    const int64_t nv = int64_t(ops.size());
    CMat gram(nv, nv);
    for (int64_t u = 0; u < nv; ++u)
        for (int64_t w = 0; w < nv; ++w) gram(u, w) = (ops[size_t(u)].adjoint() * ops[size_t(w)]).trace();
    Eigen::FullPivLU<CMat> lu(gram);
    lu.setThreshold(1e-8);
    if (lu.rank() < nv) throw NotABasis("phase point operators do not span an operator basis");
    return lu;
}

std::vector<double> expand_real(const Eigen::FullPivLU<CMat>& lu, const std::vector<CMat>& ops,
                                const CMat& target, double imag_tol) {
    const int64_t nv = int64_t(ops.size());
    Eigen::VectorXcd rhs(nv);
    for (int64_t u = 0; u < nv; ++u) rhs(u) = (ops[size_t(u)].adjoint() * target).trace();
    Eigen::VectorXcd w = lu.solve(rhs);
    std::vector<double> out(static_cast<size_t>(nv));
    for (int64_t u = 0; u < nv; ++u) {
        if (std::abs(w(u).imag()) > imag_tol)
            throw NotABasis("expansion coefficients are not real");
        out[size_t(u)] = w(u).real();
    }
    return out;
}

}  // namespace

PhasePointBasis make_basis(const Gauge& g, std::vector<Cplx> c, PauliPoint offset_x) {
    const int64_t ne = g.num_points();
    if (int64_t(c.size()) != ne) throw ContractViolation("make_basis: c must cover E");
    if (std::abs(c[0] - Cplx(1, 0)) > kEqTol)
        throw ContractViolation("make_basis: c_0 must equal mu^{gamma(0)} = 1");
    for (int64_t i = 0; i < ne; ++i)
        if (std::abs(c[size_t(i)]) < kEqTol)
            throw ContractViolation("make_basis: all c_b must be nonzero");
    // Reality (SW1): c_b^* = omega^{phi_{-b}(-1)} c_{-b}.
    for (int64_t i = 0; i < ne; ++i) {
        PauliPoint b = PauliPoint::from_index(i, g.d(), g.n());
        PauliPoint nb = b.neg(g.d());
        int64_t ph = phi_power(g, nb, g.d() - 1);
        Cplx rhs = root_of_unity(g.d(), ph) * c[size_t(nb.index(g.d()))];
        if (std::abs(std::conj(c[size_t(i)]) - rhs) > kEqTol)
            throw ContractViolation("make_basis: reality constraint (SW1) violated");
    }
    return PhasePointBasis{g, std::move(c), std::move(offset_x)};
}

PhasePointBasis gross_basis(int64_t d, int n) {
    if (d % 2 == 0) throw ContractViolation("gross_basis: d must be odd");
    Gauge g = standard_gauge(d, n);
    std::vector<Cplx> c(size_t(g.num_points()), Cplx(1, 0));
    return make_basis(g, std::move(c), PauliPoint::zero(n));
}

CMat phase_point_operator(const PhasePointBasis& basis, const PauliPoint& v) {
    const Gauge& g = basis.gauge;
    const int64_t dim = g.dim();
    if (dim > 4096) throw ResourceLimit("phase_point_operator: d^n > 4096");
    CMat acc = CMat::Zero(dim, dim);
    for (int64_t i = 0; i < g.num_points(); ++i) {
        PauliPoint b = PauliPoint::from_index(i, g.d(), g.n());
        Cplx w = root_of_unity(g.d(), -symplectic_form(g.d(), v, b)) * basis.c[size_t(i)];
        acc += w * pauli_matrix(g, b).adjoint();
    }
    return acc / double(dim);
}

std::vector<CMat> all_phase_point_operators(const PhasePointBasis& basis) {
    const Gauge& g = basis.gauge;
    const int64_t dim = g.dim();
    const int64_t ne = g.num_points();
    std::vector<SparsePauli> daggers;
    daggers.reserve(size_t(ne));
    std::vector<PauliPoint> pts;
    pts.reserve(size_t(ne));
    for (int64_t i = 0; i < ne; ++i) {
        pts.push_back(PauliPoint::from_index(i, g.d(), g.n()));
        daggers.push_back(sparse_dagger(g, pts.back()));
    }
    std::vector<CMat> ops(static_cast<size_t>(ne));
    for (int64_t iv = 0; iv < ne; ++iv) {
        CMat acc = CMat::Zero(dim, dim);
        for (int64_t ib = 0; ib < ne; ++ib) {
            Cplx w = root_of_unity(g.d(), -symplectic_form(g.d(), pts[size_t(iv)], pts[size_t(ib)])) *
                     basis.c[size_t(ib)];
            const SparsePauli& s = daggers[size_t(ib)];
            for (int64_t col = 0; col < dim; ++col) acc(s.row[size_t(col)], col) += w * s.val[size_t(col)];
        }
        ops[size_t(iv)] = acc / double(dim);
    }
    return ops;
}

WignerFunction wigner_of(const PhasePointBasis& basis, const CMat& rho) {
    const Gauge& g = basis.gauge;
    if (rho.rows() != g.dim() || rho.cols() != g.dim())
        throw ContractViolation("wigner_of: operator size does not match d^n");
    auto ops = all_phase_point_operators(basis);
    auto lu = gram_lu(ops);
    WignerFunction w{basis, expand_real(lu, ops, rho, 1e-9)};
    return w;
}

std::optional<PauliPoint> verify_covariance(const PhasePointBasis& basis, const CliffordGate& gate) {
    const Gauge& g = basis.gauge;
    auto ops = all_phase_point_operators(basis);
    const CMat udag = gate.unitary.adjoint();
    CMat g_a0 = gate.unitary * ops[0] * udag;
    int64_t match = -1;
    for (int64_t w = 0; w < int64_t(ops.size()); ++w) {
        if ((g_a0 - ops[size_t(w)]).norm() < kMatchTol) {
            if (match >= 0) throw NotABasis("verify_covariance: multiple phase point operators match");
            match = w;
        }
    }
    if (match < 0) return std::nullopt;
    PauliPoint a_g = PauliPoint::from_index(match, g.d(), g.n());
    for (int64_t iv = 0; iv < int64_t(ops.size()); ++iv) {
        PauliPoint v = PauliPoint::from_index(iv, g.d(), g.n());
        PauliPoint target = gate.apply_s(v).add(a_g, g.d());
        CMat lhs = gate.unitary * ops[size_t(iv)] * udag;
        if ((lhs - ops[size_t(target.index(g.d()))]).norm() > kMatchTol) return std::nullopt;
    }
    return a_g;
}

ThetaEffect theta_effect(const PhasePointBasis& basis, const PauliPoint& a, int64_t s) {
    const Gauge& g = basis.gauge;
    const int64_t d = g.d();
    const int64_t ne = g.num_points();
    s = mod_reduce(s, d);
    std::vector<int64_t> phi(static_cast<size_t>(d));
    std::vector<Cplx> c_ka(static_cast<size_t>(d));
    for (int64_t k = 0; k < d; ++k) {
        phi[size_t(k)] = phi_power(g, a, k);
        c_ka[size_t(k)] = basis.c[size_t(a.scaled(k, d).index(d))];
    }
    ThetaEffect theta{a, s, std::vector<double>(size_t(ne))};
    for (int64_t iv = 0; iv < ne; ++iv) {
        PauliPoint v = PauliPoint::from_index(iv, d, g.n());
        int64_t form = symplectic_form(d, v, a);
        Cplx acc = 0;
        for (int64_t k = 0; k < d; ++k)
            acc += root_of_unity(d, -k * (s + form) + phi[size_t(k)]) * c_ka[size_t(k)];
        acc /= double(d);
        if (std::abs(acc.imag()) > kThetaRealTol)
            throw InternalError("theta_effect: non-real effect value for an SW1 basis");
        theta.values[size_t(iv)] = acc.real();
    }
    return theta;
}

PositiveRepResult construct_positive_rep(const Gauge& g) {
    BetaDecision decision = decide_beta_trivial(g);
    if (decision.verdict == Verdict::kNontrivial)
        return PositiveRepResult{std::nullopt, std::nullopt, std::move(decision)};

    std::vector<int64_t> neg(decision.nu.size());
    for (size_t i = 0; i < neg.size(); ++i) neg[i] = mod_reduce(-decision.nu[i], g.d());
    Gauge trivial_gauge = g.shifted(neg);

    PauliPoint x = PauliPoint::zero(g.n());
    std::vector<Cplx> c(size_t(g.num_points()));
    for (int64_t i = 0; i < g.num_points(); ++i) {
        PauliPoint a = PauliPoint::from_index(i, g.d(), g.n());
        c[size_t(i)] = root_of_unity(g.d(), symplectic_form(g.d(), a, x));  // = 1 at x = 0
    }
    PositiveRepResult out{make_basis(trivial_gauge, std::move(c), x),
                          PositiveRepWitness{decision.nu, x}, std::move(decision)};
    // rConstr re-check against the original gauge.
    const int64_t ne = g.num_points();
    for (int64_t ia = 0; ia < ne; ++ia)
        for (int64_t ib = 0; ib < ne; ++ib) {
            PauliPoint a = PauliPoint::from_index(ia, g.d(), g.n());
            PauliPoint b = PauliPoint::from_index(ib, g.d(), g.n());
            if (symplectic_form(g.d(), a, b) != 0) continue;
            int64_t lhs = out.witness->r[size_t(ia)] + out.witness->r[size_t(ib)] -
                          out.witness->r[size_t(a.add(b, g.d()).index(g.d()))];
            if (mod_reduce(lhs, g.d()) != beta(g, a, b))
                throw InternalError("construct_positive_rep: r-witness violates the cocycle relation");
        }
    return out;
}

bool verify_positivity_preservation(const PhasePointBasis& basis, const PauliPoint& a) {
    const Gauge& g = basis.gauge;
    const int64_t d = g.d();
    const int64_t ne = g.num_points();
    if (g.dim() > 4096) throw ResourceLimit("verify_positivity_preservation: d^n > 4096");
    auto ops = all_phase_point_operators(basis);
    auto lu = gram_lu(ops);

    for (int64_t s = 0; s < d; ++s) {
        CMat proj = pauli_projector(g, a, s);
        for (int64_t iv = 0; iv < ne; ++iv) {
            PauliPoint v = PauliPoint::from_index(iv, d, g.n());
            CMat squeezed = proj * ops[size_t(iv)] * proj;
            std::vector<double> q = expand_real(lu, ops, squeezed, 1e-9);
            // Expected: delta_{s,[a,v+x]} * (1/d) with orbit multiplicity.
            int64_t gate_s = symplectic_form(d, a, v.add(basis.offset_x, d));
            std::vector<double> expected(size_t(ne), 0.0);
            if (gate_s == s) {
                for (int64_t k = 0; k < d; ++k)
                    expected[size_t(v.add(a.scaled(k, d), d).index(d))] += 1.0 / double(d);
            }
            for (int64_t w = 0; w < ne; ++w) {
                if (q[size_t(w)] < -1e-12) return false;
                if (std::abs(q[size_t(w)] - expected[size_t(w)]) > 1e-12) return false;
            }
        }
    }
    return true;
}

std::pair<BochnerReport, bool> bochner_check(const std::vector<Cplx>& f) {
    const int64_t d = int64_t(f.size());
    if (d < 1) throw ContractViolation("bochner_check: empty function");
    for (int64_t k = 0; k < d; ++k)
        if (std::abs(std::conj(f[size_t(k)]) - f[size_t(mod_reduce(-k, d))]) > 1e-9)
            throw ContractViolation("bochner_check: f(-k) != f(k)^*");

    CMat m(d, d);
    for (int64_t y = 0; y < d; ++y)
        for (int64_t x = 0; x < d; ++x) m(y, x) = f[size_t(mod_reduce(x - y, d))];

    BochnerReport rep;
    rep.fhat.resize(size_t(d));
    rep.eigen_residuals.resize(size_t(d));
    for (int64_t k = 0; k < d; ++k) {
        Cplx fh = 0;
        for (int64_t x = 0; x < d; ++x) fh += f[size_t(x)] * root_of_unity(d, k * x);
        fh /= double(d);
        rep.fhat[size_t(k)] = fh.real();  // real by the Hermitian symmetry of f
        Eigen::VectorXcd nu(d);
        for (int64_t x = 0; x < d; ++x) nu(x) = root_of_unity(d, k * x);
        rep.eigen_residuals[size_t(k)] =
            (m * nu - double(d) * fh * nu).cwiseAbs().maxCoeff();
    }
    Eigen::SelfAdjointEigenSolver<CMat> es(m);
    rep.min_matrix_eigenvalue = es.eigenvalues().minCoeff();
    rep.fhat_nonnegative = true;
    for (double v : rep.fhat) rep.fhat_nonnegative &= v >= -1e-10;
    rep.matrix_psd = rep.min_matrix_eigenvalue >= -1e-10 * double(d);
    return {rep, rep.fhat_nonnegative};
}

bool check_magnitude_necessity(const PhasePointBasis& basis) {
    for (const Cplx& v : basis.c)
        if (std::abs(std::abs(v) - 1.0) > kEqTol) return false;
    return true;
}

}  // namespace qwig
