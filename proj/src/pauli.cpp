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

#include "qwig/pauli.hpp"

#include <cmath>
#include <numbers>

namespace qwig {

namespace {

constexpr int64_t kMaxDim = 4096;

void require_same_shape(const PauliPoint& a, const PauliPoint& b) {
    if (a.n() != b.n()) throw ContractViolation("PauliPoint: qudit count mismatch");
}

int64_t dot(const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
    int64_t s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

PauliPoint PauliPoint::z_unit(int n, int qudit, int64_t amount) {
    PauliPoint p = zero(n);
    p.z[size_t(qudit)] = amount;
    return p;
}

PauliPoint PauliPoint::x_unit(int n, int qudit, int64_t amount) {
    PauliPoint p = zero(n);
    p.x[size_t(qudit)] = amount;
    return p;
}

bool PauliPoint::is_zero() const {
    for (auto v : z)
        if (v != 0) return false;
    for (auto v : x)
        if (v != 0) return false;
    return true;
}

PauliPoint PauliPoint::add(const PauliPoint& o, int64_t d) const {
    require_same_shape(*this, o);
    PauliPoint r = *this;
    for (int i = 0; i < n(); ++i) {
        r.z[size_t(i)] = mod_reduce(r.z[size_t(i)] + o.z[size_t(i)], d);
        r.x[size_t(i)] = mod_reduce(r.x[size_t(i)] + o.x[size_t(i)], d);
    }
    return r;
}

PauliPoint PauliPoint::sub(const PauliPoint& o, int64_t d) const { return add(o.neg(d), d); }

PauliPoint PauliPoint::neg(int64_t d) const {
    PauliPoint r = *this;
    for (auto& v : r.z) v = mod_reduce(-v, d);
    for (auto& v : r.x) v = mod_reduce(-v, d);
    return r;
}

PauliPoint PauliPoint::scaled(int64_t k, int64_t d) const {
    PauliPoint r = *this;
    for (auto& v : r.z) v = mod_reduce(v * k, d);
    for (auto& v : r.x) v = mod_reduce(v * k, d);
    return r;
}

std::vector<int64_t> PauliPoint::flat() const {
    std::vector<int64_t> v = z;
    v.insert(v.end(), x.begin(), x.end());
    return v;
}

PauliPoint PauliPoint::from_flat(const std::vector<int64_t>& v, int64_t d) {
    int n = int(v.size()) / 2;
    PauliPoint p = zero(n);
    for (int i = 0; i < n; ++i) {
        p.z[size_t(i)] = mod_reduce(v[size_t(i)], d);
        p.x[size_t(i)] = mod_reduce(v[size_t(n + i)], d);
    }
    return p;
}

int64_t PauliPoint::index(int64_t d) const {
    int64_t idx = 0;
    for (int i = n() - 1; i >= 0; --i) idx = idx * d + mod_reduce(x[size_t(i)], d);
    for (int i = n() - 1; i >= 0; --i) idx = idx * d + mod_reduce(z[size_t(i)], d);
    return idx;
}

PauliPoint PauliPoint::from_index(int64_t idx, int64_t d, int n) {
    PauliPoint p = zero(n);
    for (int i = 0; i < n; ++i) {
        p.z[size_t(i)] = idx % d;
        idx /= d;
    }
    for (int i = 0; i < n; ++i) {
        p.x[size_t(i)] = idx % d;
        idx /= d;
    }
    return p;
}

int64_t symplectic_form(int64_t d, const PauliPoint& a, const PauliPoint& b) {
    require_same_shape(a, b);
    return mod_reduce(dot(a.z, b.x) - dot(a.x, b.z), d);
}

Gauge::Gauge(int64_t d, int n) : d_(d), n_(n), scale_(d % 2 == 0 ? 2 : 1) {
    if (d < 2) throw ContractViolation("Gauge: d must be at least 2");
    if (n < 1) throw ContractViolation("Gauge: n must be at least 1");
}

int64_t Gauge::dim() const {
    int64_t v = 1;
    for (int i = 0; i < n_; ++i) v *= d_;
    return v;
}

int64_t Gauge::num_points() const { return dim() * dim(); }

int64_t Gauge::base_gamma(const PauliPoint& a) const {
    int64_t zx = dot(a.z, a.x);
    if (scale_ == 1) {
        int64_t inv2 = (d_ + 1) / 2;  // 2^{-1} mod d, d odd
        return mod_reduce(-inv2 * zx, d_);
    }
    return mod_reduce(zx, 2 * d_);
}

int64_t Gauge::gamma(const PauliPoint& a) const {
    if (a.n() != n_) throw ContractViolation("Gauge: point has wrong qudit count");
    if (!overrides_.empty()) {
        auto it = overrides_.find(a.index(d_));
        if (it != overrides_.end()) return it->second;
    }
    return base_gamma(a);
}

void Gauge::set_gamma(const PauliPoint& a, int64_t value) {
    value = mod_reduce(value, phase_modulus());
    if (a.is_zero() && value != 0) throw ContractViolation("Gauge: gamma(0) must be 0");
    if (scale_ == 2 && mod_reduce(value - dot(a.z, a.x), 2) != 0)
        throw ContractViolation("Gauge: even-d parity constraint violated");
    overrides_[a.index(d_)] = value;
}

Gauge Gauge::shifted(const std::vector<int64_t>& nu) const {
    if (int64_t(nu.size()) != num_points()) throw ContractViolation("Gauge: nu must cover E");
    Gauge g = *this;
    for (int64_t idx = 0; idx < num_points(); ++idx) {
        PauliPoint a = PauliPoint::from_index(idx, d_, n_);
        g.overrides_[idx] = mod_reduce(gamma(a) + scale_ * nu[size_t(idx)], phase_modulus());
    }
    return g;
}

Gauge standard_gauge(int64_t d, int n) { return Gauge(d, n); }

PauliOp PauliOp::labelled(const Gauge& g, const PauliPoint& a) { return PauliOp{g.gamma(a), a}; }

PauliOp pauli_product(const Gauge& g, const PauliOp& p, const PauliOp& q) {
    // Z(a)X(a) Z(b)X(b) = omega^{-a_X . b_Z} Z(a+b)X(a+b)
    int64_t exp = p.phase_exp + q.phase_exp - g.scale() * dot(p.point.x, q.point.z);
    return PauliOp{mod_reduce(exp, g.phase_modulus()), p.point.add(q.point, g.d())};
}

Cplx root_of_unity(int64_t modulus, int64_t exponent) {
    double angle = 2.0 * std::numbers::pi * double(mod_reduce(exponent, modulus)) / double(modulus);
    return Cplx(std::cos(angle), std::sin(angle));
}

CMat pauli_matrix(const Gauge& g, const PauliOp& op) {
    const int64_t dim = g.dim();
    if (dim > kMaxDim) throw ResourceLimit("pauli_matrix: d^n exceeds 4096");
    const int64_t d = g.d();
    const int n = g.n();
    CMat m = CMat::Zero(dim, dim);
    Cplx mu_phase = root_of_unity(g.phase_modulus(), op.phase_exp);
    // Z(a_Z)X(a_X)|c> = omega^{a_Z.(c + a_X)} |c + a_X>
    std::vector<int64_t> digits(size_t(n), 0);
    for (int64_t col = 0; col < dim; ++col) {
        int64_t row = 0, zdot = 0, base = 1;
        for (int i = 0; i < n; ++i) {
            int64_t ci = digits[size_t(i)];
            int64_t ri = mod_reduce(ci + op.point.x[size_t(i)], d);
            row += ri * base;
            base *= d;
            zdot += op.point.z[size_t(i)] * ri;
        }
        m(row, col) = mu_phase * root_of_unity(d, zdot);
        for (int i = 0; i < n; ++i) {  // advance mixed-radix counter
            if (++digits[size_t(i)] < d) break;
            digits[size_t(i)] = 0;
        }
    }
    return m;
}

CMat pauli_matrix(const Gauge& g, const PauliPoint& a) {
    return pauli_matrix(g, PauliOp::labelled(g, a));
}

int64_t beta(const Gauge& g, const PauliPoint& a, const PauliPoint& b) {
    if (symplectic_form(g.d(), a, b) != 0)
        throw ContractViolation("beta: labels do not commute");
    PauliOp prod = pauli_product(g, PauliOp::labelled(g, a), PauliOp::labelled(g, b));
    int64_t num = mod_reduce(prod.phase_exp - g.gamma(prod.point), g.phase_modulus());
    if (num % g.scale() != 0)
        throw InternalError("beta: odd phase numerator on a commuting pair (gauge bug)");
    return mod_reduce(num / g.scale(), g.d());
}

int64_t phi_power(const Gauge& g, const PauliPoint& b, int64_t k) {
    k = mod_reduce(k, g.d());
    int64_t phi = 0;
    for (int64_t j = 1; j < k; ++j)
        phi = mod_reduce(phi + beta(g, b.scaled(j, g.d()), b), g.d());
    return phi;
}

CMat pauli_projector(const Gauge& g, const PauliPoint& a, int64_t s) {
    const int64_t d = g.d();
    const int64_t dim = g.dim();
    CMat acc = CMat::Zero(dim, dim);
    for (int64_t i = 0; i < d; ++i) {
        // (T_a)^i = omega^{phi_a(i)} T_{ia}
        int64_t phase = mod_reduce(phi_power(g, a, i) - s * i, d);
        acc += root_of_unity(d, phase) * pauli_matrix(g, a.scaled(i, d));
    }
    return acc / double(d);
}

}  // namespace qwig
