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

#include "qwig/qcm.hpp"

#include <json.hpp>

#include <random>

namespace qwig {

namespace {

using nlohmann::json;

std::string registers_string(const std::vector<int64_t>& regs) {
    std::string s;
    s.reserve(regs.size());
    for (int64_t v : regs) s.push_back(char('0' + v));
    return s;
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace

int Circuit::num_registers() const {
    int mx = -1;
    for (const auto& step : steps)
        if (auto* m = std::get_if<MeasureStep>(&step)) mx = std::max(mx, m->reg);
    return mx + 1;
}

namespace {

ModMatrix mod_mat_product(const ModMatrix& a, const ModMatrix& b) {
    ModMatrix out(a.rows(), b.cols(), a.modulus());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c) {
            int64_t acc = 0;
            for (int k = 0; k < a.cols(); ++k) acc += a.at(r, k) * b.at(k, c);
            out.set(r, c, acc);
        }
    return out;
}

struct CompileState {
    ModMatrix s_acc;                 // accumulated S of the gate product U
    ModMatrix s_inv;                 // its symplectic inverse
    std::vector<int64_t> phase;      // accumulated Phi-tilde of U over E
    std::vector<int64_t> registers;  // reported outcomes so far (-1 = unknown)
};

std::unique_ptr<CompiledNode> compile_rec(const Circuit& c, size_t step_idx, CompileState st) {
    const Gauge& g = c.gauge;
    const int64_t d = g.d();
    for (size_t i = step_idx; i < c.steps.size(); ++i) {
        if (auto* gs = std::get_if<GateStep>(&c.steps[i])) {
            if (gs->cond) {
                int64_t have = st.registers[size_t(gs->cond->reg)];
                if (have < 0)
                    throw ContractViolation(
                        "compile_measurement_only: condition references a later register");
                if (have != gs->cond->equals) continue;
            }
            // U' = g U: Phi'(a) = Phi_U(a) + Phi_g(S_U a), then S' = S_g S_U.
            std::vector<int64_t> phase2(st.phase.size());
            for (int64_t idx = 0; idx < int64_t(st.phase.size()); ++idx) {
                PauliPoint a = PauliPoint::from_index(idx, d, g.n());
                PauliPoint sua = PauliPoint::from_flat(st.s_acc.apply(a.flat()), d);
                phase2[size_t(idx)] = mod_reduce(st.phase[size_t(idx)] + gs->gate.phi(sua), d);
            }
            st.phase = std::move(phase2);
            st.s_acc = mod_mat_product(gs->gate.symplectic, st.s_acc);
            st.s_inv = mod_mat_product(st.s_inv, symplectic_inverse(gs->gate.symplectic));
            continue;
        }
        const auto& ms = std::get<MeasureStep>(c.steps[i]);
        PauliPoint b = PauliPoint::from_flat(st.s_inv.apply(ms.a.flat()), d);
        auto node = std::make_unique<CompiledNode>();
        node->label = b;
        node->offset = st.phase[size_t(b.index(d))];
        node->reg = ms.reg;
        node->leaf = false;
        node->children.resize(size_t(d));
        for (int64_t s = 0; s < d; ++s) {
            CompileState next = st;
            next.registers[size_t(ms.reg)] = s;
            node->children[size_t(s)] = compile_rec(c, i + 1, std::move(next));
        }
        return node;
    }
    auto leaf = std::make_unique<CompiledNode>();
    leaf->leaf = true;
    return leaf;
}

}  // namespace

CompiledCircuit compile_measurement_only(const Circuit& c) {
    const Gauge& g = c.gauge;
    ModMatrix eye(2 * g.n(), 2 * g.n(), g.d());
    for (int i = 0; i < 2 * g.n(); ++i) eye.set(i, i, 1);
    CompileState st{eye, eye, std::vector<int64_t>(size_t(g.num_points()), 0),
                    std::vector<int64_t>(size_t(std::max(c.num_registers(), 1)), -1)};
    CompiledCircuit out{g, c.num_registers(), compile_rec(c, 0, std::move(st))};
    return out;
}

namespace {

void exact_rec(const Circuit& c, size_t step_idx, CMat rho, double weight,
               std::vector<int64_t>& regs, Distribution& out) {
    const Gauge& g = c.gauge;
    for (size_t i = step_idx; i < c.steps.size(); ++i) {
        if (auto* gs = std::get_if<GateStep>(&c.steps[i])) {
            if (gs->cond && regs[size_t(gs->cond->reg)] != gs->cond->equals) continue;
            rho = gs->gate.unitary * rho * gs->gate.unitary.adjoint();
            continue;
        }
        const auto& ms = std::get<MeasureStep>(c.steps[i]);
        for (int64_t s = 0; s < g.d(); ++s) {
            CMat proj = pauli_projector(g, ms.a, s);
            CMat collapsed = proj * rho * proj;
            double p = collapsed.trace().real();
            if (p < 1e-14) continue;
            regs[size_t(ms.reg)] = s;
            exact_rec(c, i + 1, collapsed / p, weight * p, regs, out);
        }
        regs[size_t(ms.reg)] = 0;
        return;
    }
    out[registers_string(regs)] += weight;
}

void exact_tree_rec(const Gauge& g, const CompiledNode& node, CMat rho, double weight,
                    std::vector<int64_t>& regs, Distribution& out) {
    if (node.leaf) {
        out[registers_string(regs)] += weight;
        return;
    }
    for (int64_t t = 0; t < g.d(); ++t) {
        CMat proj = pauli_projector(g, node.label, t);
        CMat collapsed = proj * rho * proj;
        double p = collapsed.trace().real();
        if (p < 1e-14) continue;
        int64_t s = mod_reduce(t - node.offset, g.d());
        regs[size_t(node.reg)] = s;
        exact_tree_rec(g, *node.children[size_t(s)], collapsed / p, weight * p, regs, out);
    }
}

int count_measurements(const Circuit& c) {
    int k = 0;
    for (const auto& step : c.steps) k += std::holds_alternative<MeasureStep>(step) ? 1 : 0;
    return k;
}

}  // namespace

Distribution exact_distribution(const Circuit& c, const CMat& rho_in) {
    if (c.gauge.dim() > 1024) throw ResourceLimit("exact_distribution: d^n > 1024");
    if (count_measurements(c) > 6) throw ResourceLimit("exact_distribution: more than 6 measurements");
    if (rho_in.rows() != c.gauge.dim() || rho_in.cols() != c.gauge.dim())
        throw ContractViolation("exact_distribution: state size mismatch");
    Distribution out;
    std::vector<int64_t> regs(size_t(c.num_registers()), 0);
    exact_rec(c, 0, rho_in, 1.0, regs, out);
    return out;
}

Distribution exact_distribution(const CompiledCircuit& c, const CMat& rho_in) {
    if (c.gauge.dim() > 1024) throw ResourceLimit("exact_distribution: d^n > 1024");
    Distribution out;
    std::vector<int64_t> regs(size_t(c.num_registers), 0);
    exact_tree_rec(c.gauge, *c.root, rho_in, 1.0, regs, out);
    return out;
}

double total_variation(const Distribution& p, const Distribution& q) {
    double tv = 0;
    for (const auto& [k, v] : p) {
        auto it = q.find(k);
        tv += std::abs(v - (it == q.end() ? 0.0 : it->second));
    }
    for (const auto& [k, v] : q)
        if (!p.count(k)) tv += v;
    return tv / 2.0;
}

Distribution simulate_sampling(const PhasePointBasis& basis, const CompiledCircuit& c,
                               const std::vector<double>& w_in, int64_t shots, uint64_t seed) {
    const Gauge& g = basis.gauge;
    const int64_t d = g.d();
    if (d % 2 == 0)
        throw ContractViolation("simulate_sampling: positive representation requires odd d");
    if (int64_t(w_in.size()) != g.num_points())
        throw ContractViolation("simulate_sampling: Wigner function must cover V");
    for (int64_t i = 0; i < int64_t(w_in.size()); ++i)
        if (w_in[size_t(i)] < -1e-12)
            throw ContractViolation("simulate_sampling: negative Wigner input at point index " +
                                    std::to_string(i));

    std::vector<double> cdf(w_in.size());
    double acc = 0;
    for (size_t i = 0; i < w_in.size(); ++i) {
        acc += std::max(w_in[i], 0.0);
        cdf[i] = acc;
    }
    if (acc <= 0) throw ContractViolation("simulate_sampling: Wigner input sums to zero");

    Distribution out;
    std::vector<int64_t> regs(size_t(c.num_registers), 0);
    for (int64_t shot = 0; shot < shots; ++shot) {
        std::mt19937_64 rng(splitmix64(seed ^ splitmix64(uint64_t(shot))));
        std::uniform_real_distribution<double> unif(0.0, acc);
        std::uniform_int_distribution<int64_t> pick_k(0, d - 1);
        double r = unif(rng);
        size_t idx = size_t(std::lower_bound(cdf.begin(), cdf.end(), r) - cdf.begin());
        if (idx >= cdf.size()) idx = cdf.size() - 1;
        PauliPoint v = PauliPoint::from_index(int64_t(idx), d, g.n());

        const CompiledNode* node = c.root.get();
        while (!node->leaf) {
            int64_t t = symplectic_form(d, node->label, v.add(basis.offset_x, d));
            int64_t s = mod_reduce(t - node->offset, d);
            regs[size_t(node->reg)] = s;
            v = v.add(node->label.scaled(pick_k(rng), d), d);
            node = node->children[size_t(s)].get();
        }
        out[registers_string(regs)] += 1.0;
    }
    for (auto& [k, vcount] : out) vcount /= double(shots);
    return out;
}

Circuit circuit_from_json(const std::string& text, const Gauge& gauge) {
    json j = json::parse(text);
    if (j.at("d").get<int64_t>() != gauge.d() || j.at("n").get<int>() != gauge.n())
        throw ContractViolation("circuit_from_json: (d, n) mismatch with gauge");
    Circuit c{gauge, {}};
    const int64_t d = gauge.d();
    const int n = gauge.n();
    for (const auto& js : j.at("steps")) {
        std::string type = js.at("type").get<std::string>();
        if (type == "measure") {
            auto flat = js.at("a").get<std::vector<int64_t>>();
            if (int(flat.size()) != 2 * n)
                throw ContractViolation("circuit_from_json: measurement label needs 2n entries");
            c.steps.push_back(MeasureStep{PauliPoint::from_flat(flat, d), js.at("reg").get<int>()});
            continue;
        }
        if (type != "gate") throw ContractViolation("circuit_from_json: unknown step type " + type);
        CMat u;
        std::string name = js.value("name", std::string());
        if (!name.empty()) {
            std::vector<int> targets = js.value("targets", std::vector<int>{0});
            if (name == "identity") {
                u = CMat::Identity(gauge.dim(), gauge.dim());
            } else if (name == "fourier") {
                u = embed_single(d, n, fourier_matrix(d), targets.at(0));
            } else if (name == "phase") {
                u = embed_single(d, n, phase_gate_matrix(gauge), targets.at(0));
            } else if (name == "x") {
                u = pauli_matrix(gauge, PauliPoint::x_unit(n, targets.at(0)));
            } else if (name == "z") {
                u = pauli_matrix(gauge, PauliPoint::z_unit(n, targets.at(0)));
            } else if (name == "sum") {
                u = sum_gate_matrix(d, n, targets.at(0), targets.at(1));
            } else if (name == "quadratic") {
                u = quadratic_gate(gauge).unitary;
            } else {
                throw ContractViolation("circuit_from_json: unknown gate name " + name);
            }
        } else {
            auto rows = js.at("matrix");
            int64_t dim = gauge.dim();
            u = CMat::Zero(dim, dim);
            for (int64_t r = 0; r < dim; ++r)
                for (int64_t cc = 0; cc < dim; ++cc) {
                    auto cell = rows.at(size_t(r)).at(size_t(cc));
                    u(r, cc) = Cplx(cell.at(0).get<double>(), cell.at(1).get<double>());
                }
        }
        GateStep step{extract_action(gauge, u, name.empty() ? "matrix" : name), std::nullopt};
        if (js.contains("cond"))
            step.cond = Condition{js["cond"].at("reg").get<int>(), js["cond"].at("equals").get<int64_t>()};
        c.steps.push_back(std::move(step));
    }
    return c;
}

}  // namespace qwig
