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

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qwig/pauli.hpp"

namespace qwig {

/// Basis tuple [v_1|...|v_k]. Restricted tuples must be pairwise commuting
/// (the complex C); unrestricted tuples form the bar complex of E.
struct Tuple {
    std::vector<PauliPoint> entries;
    bool restricted = true;

    int degree() const { return int(entries.size()); }
};

/// Formal Z_d-linear combination of degree-k basis tuples.
class Chain {
public:
    Chain(int64_t d, int n, int degree, bool restricted);

    int64_t d() const { return d_; }
    int n() const { return n_; }
    int degree() const { return degree_; }
    bool restricted() const { return restricted_; }

    void add(const std::vector<PauliPoint>& entries, int64_t coeff);
    bool is_zero() const { return coeffs_.empty(); }

    const std::map<std::vector<int64_t>, int64_t>& coefficients() const { return coeffs_; }
    std::vector<PauliPoint> tuple_points(const std::vector<int64_t>& key) const;

    bool operator==(const Chain& o) const = default;

private:
    int64_t d_;
    int n_;
    int degree_;
    bool restricted_;
    std::map<std::vector<int64_t>, int64_t> coeffs_;  // tuple (as point indices) -> coeff
};

/// Z_d-valued function on degree-k basis tuples, extended linearly.
struct Cochain {
    int degree = 0;
    std::function<int64_t(const std::vector<PauliPoint>&)> basis_value;
};

/// nu as a 1-cochain, dense over E by point index.
Cochain nu_cochain(int64_t d, int n, std::vector<int64_t> values);

/// beta of the gauge as a 2-cochain on commuting pairs.
Cochain beta_cochain(const Gauge& g);

/// Boundary of Eq.-style alternating sum; degree drops by one.
Chain boundary(const Chain& c);

/// Linear extension of f to the chain.
int64_t evaluate(const Cochain& f, const Chain& c);

/// f(boundary(c)); degree of f must be degree of c minus one.
int64_t coboundary_eval(const Cochain& f, const Chain& c);

/// d(beta) = 0 over commuting triples; exhaustive when |E| <= exhaustive_cap,
/// sampled (fixed seed) otherwise.
bool check_beta_cocycle(const Gauge& g, int64_t exhaustive_cap = 128, int64_t samples = 20000);

struct MerminFace {
    std::string name;
    int64_t coeff;  // +1 or -1
    PauliPoint first, second;
    int64_t beta_value;  // of the underlying commuting pair, in the reporting gauge
};

/// Six-face torus cycle F with dF = 0 and beta(F) = d/2.
struct MerminCertificate {
    Chain cycle;
    std::vector<MerminFace> faces;
    int64_t total_beta;
};

MerminCertificate mermin_certificate(int64_t d, int n);
MerminCertificate mermin_certificate(const Gauge& g);

enum class Verdict { kTrivial, kNontrivial };

/// Outcome of the [beta] = 0 decision with a re-checkable witness.
struct BetaDecision {
    Verdict verdict;
    std::vector<int64_t> nu;  // TRIVIAL: beta = d(nu), dense over E
    std::optional<MerminCertificate> certificate;  // NONTRIVIAL (even d, n >= 2)
    std::string detail;  // raw inconsistency report for hypothetical other cases
};

/// Decide [beta] = 0 by solving nu(a) + nu(b) - nu(a+b) = beta(a,b) over all
/// commuting pairs; |E| <= 4096 required.
BetaDecision decide_beta_trivial(const Gauge& g);

}  // namespace qwig
