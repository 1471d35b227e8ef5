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

#include "qwig/modlinalg.hpp"

#include <algorithm>
#include <numeric>

namespace qwig {

int64_t mod_reduce(int64_t v, int64_t m) {
    v %= m;
    return v < 0 ? v + m : v;
}

ModInt::ModInt(int64_t v, int64_t m) : value(mod_reduce(v, m)), modulus(m) {
    if (m <= 0) throw ContractViolation("ModInt: modulus must be positive");
}

static void require_same_modulus(const ModInt& a, const ModInt& b) {
    if (a.modulus != b.modulus) throw ContractViolation("ModInt: modulus mismatch");
}

ModInt ModInt::operator+(const ModInt& o) const {
    require_same_modulus(*this, o);
    return ModInt(value + o.value, modulus);
}
ModInt ModInt::operator-(const ModInt& o) const {
    require_same_modulus(*this, o);
    return ModInt(value - o.value, modulus);
}
ModInt ModInt::operator*(const ModInt& o) const {
    require_same_modulus(*this, o);
    return ModInt(value * o.value, modulus);
}
ModInt ModInt::operator-() const { return ModInt(-value, modulus); }

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw ContractViolation("IntMatrix: shape mismatch in product");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const mpz_class& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

mpz_class IntMatrix::determinant() const {
    if (rows_ != cols_) throw ContractViolation("IntMatrix: determinant of non-square matrix");
    // Bareiss fraction-free elimination.
    IntMatrix m = *this;
    int n = rows_;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = t / prev;  // exact by Bareiss
            }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

namespace {

struct SnfWork {
    IntMatrix a, u, v;

    void row_swap(int i, int j) {
        for (int c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
        for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void col_swap(int i, int j) {
        for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
        for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    void row_addmul(int dst, int src, const mpz_class& q) {
        for (int c = 0; c < a.cols(); ++c) a.at(dst, c) += q * a.at(src, c);
        for (int c = 0; c < u.cols(); ++c) u.at(dst, c) += q * u.at(src, c);
    }
    void col_addmul(int dst, int src, const mpz_class& q) {
        for (int r = 0; r < a.rows(); ++r) a.at(r, dst) += q * a.at(r, src);
        for (int r = 0; r < v.rows(); ++r) v.at(r, dst) += q * v.at(r, src);
    }
    void row_negate(int i) {
        for (int c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
        for (int c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    }

    bool find_pivot(int t, int& pr, int& pc) {
        pr = pc = -1;
        mpz_class best;
        for (int i = t; i < a.rows(); ++i)
            for (int j = t; j < a.cols(); ++j) {
                if (a.at(i, j) == 0) continue;
                mpz_class mag = abs(a.at(i, j));
                if (pr < 0 || mag < best) {
                    best = mag;
                    pr = i;
                    pc = j;
                }
            }
        return pr >= 0;
    }

    // Clear row t and column t outside the pivot at (t, t).
    void clear_cross(int t) {
        for (;;) {
            int pr, pc;
            if (!find_pivot(t, pr, pc)) return;
            if (pr != t) row_swap(t, pr);
            if (pc != t) col_swap(t, pc);
            bool dirty = false;
            for (int i = t + 1; i < a.rows(); ++i) {
                if (a.at(i, t) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(i, t).get_mpz_t(), a.at(t, t).get_mpz_t());
                row_addmul(i, t, -q);
                if (a.at(i, t) != 0) dirty = true;  // remainder became new smaller entry
            }
            for (int j = t + 1; j < a.cols(); ++j) {
                if (a.at(t, j) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(t, j).get_mpz_t(), a.at(t, t).get_mpz_t());
                col_addmul(j, t, -q);
                if (a.at(t, j) != 0) dirty = true;
            }
            if (!dirty) {
                bool clean = true;
                for (int i = t + 1; i < a.rows() && clean; ++i) clean = a.at(i, t) == 0;
                for (int j = t + 1; j < a.cols() && clean; ++j) clean = a.at(t, j) == 0;
                if (clean) return;
            }
        }
    }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& input) {
    SnfWork w{input, IntMatrix::identity(input.rows()), IntMatrix::identity(input.cols())};
    int steps = std::min(input.rows(), input.cols());
    for (int t = 0; t < steps; ++t) w.clear_cross(t);

    // Divisibility chain: fold gcds forward, then re-diagonalize.
    for (;;) {
        bool fixed = true;
        for (int t = 0; t + 1 < steps; ++t) {
            const mpz_class& di = w.a.at(t, t);
            const mpz_class& dj = w.a.at(t + 1, t + 1);
            if (di == 0 && dj != 0) {  // push zeros to the end
                w.col_swap(t, t + 1);
                w.row_swap(t, t + 1);
                fixed = false;
                continue;
            }
            if (di == 0 || dj == 0) continue;
            if (dj % di != 0) {
                w.col_addmul(t, t + 1, 1);  // introduces dj below the pivot
                w.clear_cross(t);
                fixed = false;
            }
        }
        if (fixed) break;
    }
    for (int t = 0; t < steps; ++t)
        if (w.a.at(t, t) < 0) w.row_negate(t);
    return SmithResult{w.u, w.a, w.v};
}

ModMatrix::ModMatrix(int rows, int cols, int64_t modulus)
    : rows_(rows), cols_(cols), m_(modulus), a_(size_t(rows) * cols, 0) {
    if (modulus <= 0) throw ContractViolation("ModMatrix: modulus must be positive");
}

std::vector<int64_t> ModMatrix::apply(const std::vector<int64_t>& x) const {
    if (int(x.size()) != cols_) throw ContractViolation("ModMatrix: vector length mismatch");
    std::vector<int64_t> y(rows_, 0);
    for (int i = 0; i < rows_; ++i) {
        int64_t acc = 0;
        for (int j = 0; j < cols_; ++j) acc += at(i, j) * mod_reduce(x[j], m_) % m_;
        y[i] = mod_reduce(acc, m_);
    }
    return y;
}

namespace {

int64_t mpz_mod_to_i64(const mpz_class& v, int64_t m) {
    mpz_class r = v % m;
    if (r < 0) r += m;
    return r.get_si();
}

}  // namespace

std::optional<std::vector<int64_t>> mod_solve(const ModMatrix& a, const std::vector<int64_t>& b) {
    if (int(b.size()) != a.rows()) throw ContractViolation("mod_solve: rhs length mismatch");
    const int64_t m = a.modulus();
    const int n = a.cols();

    // Compress the row span first; large systems collapse to <= n + 1 rows.
    RowReducer red(n, m);
    for (int i = 0; i < a.rows(); ++i) {
        std::vector<int64_t> row(n);
        for (int j = 0; j < n; ++j) row[j] = a.at(i, j);
        red.add_row(std::move(row), b[i]);
    }
    auto [ra, rb] = red.system();

    IntMatrix lift(ra.rows(), n);
    for (int i = 0; i < ra.rows(); ++i)
        for (int j = 0; j < n; ++j) lift.at(i, j) = ra.at(i, j);
    SmithResult snf = smith_normal_form(lift);

    // c = U b; solve D y = c (mod m) entry by entry.
    std::vector<int64_t> c(ra.rows(), 0);
    for (int i = 0; i < ra.rows(); ++i) {
        mpz_class acc = 0;
        for (int j = 0; j < ra.rows(); ++j) acc += snf.u.at(i, j) * rb[j];
        c[i] = mpz_mod_to_i64(acc, m);
    }
    std::vector<int64_t> y(n, 0);
    const int diag = std::min(ra.rows(), n);
    for (int i = 0; i < ra.rows(); ++i) {
        int64_t di = i < diag ? mpz_mod_to_i64(snf.d.at(i, i), m) : 0;
        if (di == 0) {
            if (c[i] != 0) return std::nullopt;
            continue;  // free variable, pinned to 0
        }
        int64_t g = std::gcd(di, m);
        if (c[i] % g != 0) return std::nullopt;
        // di/g is a unit mod m/g; invert by extended gcd.
        int64_t mm = m / g, dd = (di / g) % mm, cc = (c[i] / g) % mm;
        int64_t t0 = 0, t1 = 1, r0 = mm, r1 = dd;
        while (r1 != 0) {
            int64_t q = r0 / r1;
            std::swap(r0 -= q * r1, r1);
            std::swap(t0 -= q * t1, t1);
        }
        int64_t inv = mod_reduce(t0, mm);
        y[i] = mod_reduce(cc * inv, mm);  // smallest representative
    }
    std::vector<int64_t> x(n, 0);
    for (int i = 0; i < n; ++i) {
        mpz_class acc = 0;
        for (int j = 0; j < n; ++j) acc += snf.v.at(i, j) * y[j];
        x[i] = mpz_mod_to_i64(acc, m);
    }
    // The reduction above is span-preserving, so this cannot fire.
    auto check = a.apply(x);
    for (int i = 0; i < a.rows(); ++i)
        if (check[i] != mod_reduce(b[i], m)) throw InternalError("mod_solve: residual after solve");
    return x;
}

std::vector<std::vector<int64_t>> mod_kernel(const ModMatrix& a) {
    const int64_t m = a.modulus();
    const int n = a.cols();

    RowReducer red(n, m);
    for (int i = 0; i < a.rows(); ++i) {
        std::vector<int64_t> row(n);
        for (int j = 0; j < n; ++j) row[j] = a.at(i, j);
        red.add_row(std::move(row), 0);
    }
    auto [ra, rb] = red.system();
    (void)rb;

    IntMatrix lift(std::max(ra.rows(), 1), n);
    for (int i = 0; i < ra.rows(); ++i)
        for (int j = 0; j < n; ++j) lift.at(i, j) = ra.at(i, j);
    SmithResult snf = smith_normal_form(lift);

    std::vector<std::vector<int64_t>> gens;
    const int diag = std::min(lift.rows(), n);
    for (int j = 0; j < n; ++j) {
        int64_t dj = j < diag ? mpz_mod_to_i64(snf.d.at(j, j), m) : 0;
        int64_t g = std::gcd(dj, m);  // gcd(0, m) = m
        int64_t step = m / g;
        if (step % m == 0) continue;  // y_j forced to 0
        std::vector<int64_t> gen(n, 0);
        bool nonzero = false;
        for (int i = 0; i < n; ++i) {
            gen[i] = mpz_mod_to_i64(snf.v.at(i, j) * step, m);
            nonzero |= gen[i] != 0;
        }
        if (nonzero) gens.push_back(std::move(gen));
    }
    return gens;
}

RowReducer::RowReducer(int cols, int64_t modulus)
    : cols_(cols), m_(modulus), holder_(size_t(cols) + 1, -1) {
    if (modulus <= 0) throw ContractViolation("RowReducer: modulus must be positive");
}

void RowReducer::add_row(std::vector<int64_t> lhs, int64_t rhs) {
    if (int(lhs.size()) != cols_) throw ContractViolation("RowReducer: row length mismatch");
    std::vector<int64_t> row = std::move(lhs);
    row.push_back(rhs);
    for (auto& e : row) e = mod_reduce(e, m_);

    for (int c = 0; c <= cols_;) {
        if (row[size_t(c)] == 0) {
            ++c;
            continue;
        }
        int holder = holder_[size_t(c)];
        if (holder < 0) {
            holder_[size_t(c)] = int(rows_.size());
            rows_.push_back(std::move(row));
            lead_.push_back(c);
            return;
        }
        // Unimodular 2x2 combination putting gcd into the holder row.
        auto& h = rows_[size_t(holder)];
        int64_t aa = h[c], bb = row[c];
        int64_t x0 = 1, x1 = 0, y0 = 0, y1 = 1, r0 = aa, r1 = bb;
        while (r1 != 0) {
            int64_t q = r0 / r1;
            std::swap(r0 -= q * r1, r1);
            std::swap(x0 -= q * x1, x1);
            std::swap(y0 -= q * y1, y1);
        }
        int64_t g = r0;  // = x0*aa + y0*bb
        for (int j = 0; j <= cols_; ++j) {
            int64_t hv = h[j], rv = row[j];
            h[j] = mod_reduce(x0 * hv + y0 * rv, m_);
            row[j] = mod_reduce(-(bb / g) * hv + (aa / g) * rv, m_);
        }
        // row[c] is now 0; continue scanning right.
    }
}

std::pair<ModMatrix, std::vector<int64_t>> RowReducer::system() const {
    ModMatrix a(int(rows_.size()), cols_, m_);
    std::vector<int64_t> b(rows_.size());
    for (size_t i = 0; i < rows_.size(); ++i) {
        for (int j = 0; j < cols_; ++j) a.set(int(i), j, rows_[i][j]);
        b[i] = rows_[i][size_t(cols_)];
    }
    return {a, b};
}

}  // namespace qwig
