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

#include "qwig/cohomology.hpp"

#include <array>
#include <random>
#include <set>

namespace qwig {

Chain::Chain(int64_t d, int n, int degree, bool restricted)
    : d_(d), n_(n), degree_(degree), restricted_(restricted) {
    if (degree < 0 || degree > 3) throw ContractViolation("Chain: degree must be in 0..3");
}

void Chain::add(const std::vector<PauliPoint>& entries, int64_t coeff) {
    if (int(entries.size()) != degree_) throw ContractViolation("Chain: tuple degree mismatch");
    if (restricted_)
        for (size_t i = 0; i < entries.size(); ++i)
            for (size_t j = i + 1; j < entries.size(); ++j)
                if (symplectic_form(d_, entries[i], entries[j]) != 0)
                    throw ContractViolation("Chain: non-commuting tuple in restricted complex");
    std::vector<int64_t> key(entries.size());
    for (size_t i = 0; i < entries.size(); ++i) key[i] = entries[i].index(d_);
    int64_t v = mod_reduce(coeffs_[key] + coeff, d_);
    if (v == 0)
        coeffs_.erase(key);
    else
        coeffs_[key] = v;
}

std::vector<PauliPoint> Chain::tuple_points(const std::vector<int64_t>& key) const {
    std::vector<PauliPoint> pts;
    pts.reserve(key.size());
    for (int64_t idx : key) pts.push_back(PauliPoint::from_index(idx, d_, n_));
    return pts;
}

Cochain nu_cochain(int64_t d, int n, std::vector<int64_t> values) {
    return Cochain{1, [d, values = std::move(values)](const std::vector<PauliPoint>& t) {
                       return mod_reduce(values[size_t(t[0].index(d))], d);
                   }};
}

Cochain beta_cochain(const Gauge& g) {
    return Cochain{2, [g](const std::vector<PauliPoint>& t) { return beta(g, t[0], t[1]); }};
}

Chain boundary(const Chain& c) {
    if (c.degree() < 1) throw ContractViolation("boundary: degree must be at least 1");
    Chain out(c.d(), c.n(), c.degree() - 1, c.restricted());
    const int k = c.degree();
    for (const auto& [key, coeff] : c.coefficients()) {
        auto pts = c.tuple_points(key);
        std::vector<PauliPoint> head(pts.begin() + 1, pts.end());
        out.add(head, coeff);
        int64_t sign = 1;
        for (int i = 0; i + 1 < k; ++i) {
            sign = -sign;
            std::vector<PauliPoint> merged;
            merged.reserve(size_t(k) - 1);
            for (int j = 0; j < k; ++j) {
                if (j == i) {
                    merged.push_back(pts[size_t(j)].add(pts[size_t(j) + 1], c.d()));
                    ++j;
                } else {
                    merged.push_back(pts[size_t(j)]);
                }
            }
            out.add(merged, sign * coeff);
        }
        std::vector<PauliPoint> tail(pts.begin(), pts.end() - 1);
        out.add(tail, (k % 2 == 0 ? 1 : -1) * coeff);
    }
    return out;
}

int64_t evaluate(const Cochain& f, const Chain& c) {
    if (f.degree != c.degree()) throw ContractViolation("evaluate: degree mismatch");
    int64_t acc = 0;
    for (const auto& [key, coeff] : c.coefficients())
        acc = mod_reduce(acc + coeff * f.basis_value(c.tuple_points(key)), c.d());
    return acc;
}

int64_t coboundary_eval(const Cochain& f, const Chain& c) {
    if (f.degree != c.degree() - 1) throw ContractViolation("coboundary_eval: degree mismatch");
    return evaluate(f, boundary(c));
}

bool check_beta_cocycle(const Gauge& g, int64_t exhaustive_cap, int64_t samples) {
    const int64_t d = g.d();
    const int64_t ne = g.num_points();
    auto triple_ok = [&](const PauliPoint& a, const PauliPoint& b, const PauliPoint& c) {
        int64_t lhs = beta(g, b, c) - beta(g, a.add(b, d), c) + beta(g, a, b.add(c, d)) - beta(g, a, b);
        return mod_reduce(lhs, d) == 0;
    };
    if (ne <= exhaustive_cap) {
        for (int64_t ia = 0; ia < ne; ++ia) {
            PauliPoint a = PauliPoint::from_index(ia, d, g.n());
            for (int64_t ib = 0; ib < ne; ++ib) {
                PauliPoint b = PauliPoint::from_index(ib, d, g.n());
                if (symplectic_form(d, a, b) != 0) continue;
                for (int64_t ic = 0; ic < ne; ++ic) {
                    PauliPoint c = PauliPoint::from_index(ic, d, g.n());
                    if (symplectic_form(d, a, c) != 0 || symplectic_form(d, b, c) != 0) continue;
                    if (!triple_ok(a, b, c)) return false;
                }
            }
        }
        return true;
    }
    std::mt19937_64 rng(0x5eedbeef);
    std::uniform_int_distribution<int64_t> pick(0, ne - 1);
    int64_t tested = 0;
    while (tested < samples) {
        PauliPoint a = PauliPoint::from_index(pick(rng), d, g.n());
        PauliPoint b = PauliPoint::from_index(pick(rng), d, g.n());
        PauliPoint c = PauliPoint::from_index(pick(rng), d, g.n());
        if (symplectic_form(d, a, b) != 0 || symplectic_form(d, a, c) != 0 ||
            symplectic_form(d, b, c) != 0)
            continue;
        if (!triple_ok(a, b, c)) return false;
        ++tested;
    }
    return true;
}

MerminCertificate mermin_certificate(const Gauge& g) {
    const int64_t d = g.d();
    const int n = g.n();
    if (d % 2 != 0) throw ContractViolation("mermin_certificate: d must be even");
    if (n < 2) throw ContractViolation("mermin_certificate: n must be at least 2");
    const int64_t h = d / 2;

    PauliPoint a = PauliPoint::z_unit(n, 0, d - 1);  // Z^{-1} (x) I
    PauliPoint b = PauliPoint::z_unit(n, 1, 1);      // I (x) Z
    PauliPoint c = PauliPoint::x_unit(n, 1, h);      // I (x) X^{d/2}
    PauliPoint e = PauliPoint::x_unit(n, 0, h);      // X^{-d/2} (x) I

    struct FaceSpec {
        const char* name;
        int64_t coeff;
        PauliPoint u, v;
    };
    const FaceSpec specs[6] = {
        {"f1", 1, c, e},
        {"f2", 1, a.add(b, d), c.add(e, d)},
        {"f3", 1, a, b},
        {"f4", -1, b, e},
        {"f5", -1, a.add(c, d), b.add(e, d)},
        {"f6", -1, a, c},
    };

    MerminCertificate cert{Chain(d, n, 2, true), {}, 0};
    for (const auto& s : specs) {
        cert.cycle.add({s.u, s.v}, s.coeff);
        int64_t bv = beta(g, s.u, s.v);
        cert.faces.push_back(MerminFace{s.name, s.coeff, s.u, s.v, bv});
        cert.total_beta = mod_reduce(cert.total_beta + s.coeff * bv, d);
    }
    if (!boundary(cert.cycle).is_zero())
        throw InternalError("mermin_certificate: cycle has nonzero boundary");
    if (evaluate(beta_cochain(g), cert.cycle) != cert.total_beta)
        throw InternalError("mermin_certificate: face sum disagrees with chain evaluation");
    if (cert.total_beta != h)
        throw InternalError("mermin_certificate: beta(F) != d/2");
    return cert;
}

MerminCertificate mermin_certificate(int64_t d, int n) {
    return mermin_certificate(standard_gauge(d, n));
}

BetaDecision decide_beta_trivial(const Gauge& g) {
    const int64_t d = g.d();
    const int64_t ne = g.num_points();
    if (ne > 4096)
        throw ResourceLimit("decide_beta_trivial: |E| > 4096; use mermin_certificate");

    // Unknowns nu(a) for a != 0; nu(0) pinned to 0. Both orientations of a
    // pair enter when their beta values differ (symmetry is observed, not
    // assumed); equal orientations collapse to one row.
    const int cols = int(ne - 1);
    RowReducer red(cols, d);
    std::set<std::array<int64_t, 3>> seen;
    std::vector<PauliPoint> pts;
    pts.reserve(size_t(ne));
    for (int64_t i = 0; i < ne; ++i) pts.push_back(PauliPoint::from_index(i, d, g.n()));

    for (int64_t ia = 1; ia < ne; ++ia)
        for (int64_t ib = 1; ib < ne; ++ib) {
            const PauliPoint &a = pts[size_t(ia)], &b = pts[size_t(ib)];
            if (symplectic_form(d, a, b) != 0) continue;
            int64_t rhs = beta(g, a, b);
            if (!seen.insert({std::min(ia, ib), std::max(ia, ib), rhs}).second) continue;
            std::vector<int64_t> row(size_t(cols), 0);
            row[size_t(ia - 1)] += 1;
            row[size_t(ib - 1)] += 1;
            int64_t isum = a.add(b, d).index(d);
            if (isum != 0) row[size_t(isum - 1)] -= 1;
            for (auto& v : row) v = mod_reduce(v, d);
            red.add_row(std::move(row), rhs);
        }

    auto [mat, rhs] = red.system();
    auto sol = mod_solve(mat, rhs);
    if (sol) {
        BetaDecision dec{Verdict::kTrivial, std::vector<int64_t>(size_t(ne), 0), std::nullopt, ""};
        for (int64_t i = 1; i < ne; ++i) dec.nu[size_t(i)] = (*sol)[size_t(i - 1)];
        // Re-gauging by -nu must kill beta on every commuting pair.
        std::vector<int64_t> neg(dec.nu.size());
        for (size_t i = 0; i < neg.size(); ++i) neg[i] = mod_reduce(-dec.nu[i], d);
        Gauge regauged = g.shifted(neg);
        for (int64_t ia = 0; ia < ne; ++ia)
            for (int64_t ib = 0; ib < ne; ++ib) {
                if (symplectic_form(d, pts[size_t(ia)], pts[size_t(ib)]) != 0) continue;
                if (beta(regauged, pts[size_t(ia)], pts[size_t(ib)]) != 0)
                    throw InternalError("decide_beta_trivial: witness fails to trivialize beta");
            }
        return dec;
    }
    if (d % 2 == 0 && g.n() >= 2) {
        MerminCertificate cert = mermin_certificate(g);
        return BetaDecision{Verdict::kNontrivial, {}, std::move(cert), ""};
    }
    return BetaDecision{Verdict::kNontrivial, {}, std::nullopt,
                        "linear system over Z_d inconsistent; no normalized certificate for this "
                        "parameter class"};
}

}  // namespace qwig
