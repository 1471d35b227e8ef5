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

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "qwig/errors.hpp"

namespace qwig {

/// Residue in Z_m, kept normalized to [0, m).
struct ModInt {
    int64_t value = 0;
    int64_t modulus = 1;

    ModInt() = default;
    ModInt(int64_t v, int64_t m);

    ModInt operator+(const ModInt& o) const;
    ModInt operator-(const ModInt& o) const;
    ModInt operator*(const ModInt& o) const;
    ModInt operator-() const;
    bool operator==(const ModInt& o) const = default;
};

/// Normalize an integer into [0, m).
int64_t mod_reduce(int64_t v, int64_t m);

/// Dense integer matrix with arbitrary-precision entries (row major).
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    mpz_class& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const mpz_class& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const = default;

    /// Exact determinant (fraction-free elimination); square matrices only.
    mpz_class determinant() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<mpz_class> a_;
};

/// U * A * V = D with U, V unimodular and D diagonal, each diagonal
/// entry nonnegative and dividing the next.
struct SmithResult {
    IntMatrix u, d, v;
};

SmithResult smith_normal_form(const IntMatrix& a);

/// Matrix over Z_m; all entries share the modulus.
class ModMatrix {
public:
    ModMatrix(int rows, int cols, int64_t modulus);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int64_t modulus() const { return m_; }
    int64_t& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    int64_t at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }
    void set(int r, int c, int64_t v) { a_[size_t(r) * cols_ + c] = mod_reduce(v, m_); }

    std::vector<int64_t> apply(const std::vector<int64_t>& x) const;

private:
    int rows_, cols_;
    int64_t m_;
    std::vector<int64_t> a_;
};

/// Solve A x = b over Z_m. Returns the canonical solution (back-substitution
/// through the Smith form of the integer lift, free variables pinned to 0),
/// or nullopt when the system is inconsistent.
std::optional<std::vector<int64_t>> mod_solve(const ModMatrix& a, const std::vector<int64_t>& b);

/// Generators of { x : A x = 0 mod m }.
std::vector<std::vector<int64_t>> mod_kernel(const ModMatrix& a);

/// Incremental row reduction over Z_m through unimodular integer row
/// operations (entry reduction mod m is sound: it adds multiples of the
/// implicit m*e_i rows). Preserves the Z_m row span of everything inserted,
/// so the solution set of the accumulated system is unchanged.
class RowReducer {
public:
    RowReducer(int cols, int64_t modulus);

    /// Insert one equation row (lhs | rhs).
    void add_row(std::vector<int64_t> lhs, int64_t rhs);

    /// Reduced equation set as (A | b).
    std::pair<ModMatrix, std::vector<int64_t>> system() const;

    int row_count() const { return int(rows_.size()); }

private:
    int cols_;  // lhs columns; stored rows have cols_ + 1 entries
    int64_t m_;
    std::vector<std::vector<int64_t>> rows_;  // echelon by leading column
    std::vector<int> lead_;                   // leading column per stored row
    std::vector<int> holder_;                 // leading column -> stored row, or -1
};

}  // namespace qwig
