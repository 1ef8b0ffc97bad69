/*
   Copyright 2026 the dbtorus authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "dbt/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace dbt {

int gfp_inv_scalar(int p, int v) {
    v %= p;
    if (v < 0) v += p;
    if (v == 0) throw std::domain_error("gfp_inv_scalar: zero");
    // Fermat: v^(p-2) mod p
    long long base = v, acc = 1;
    int e = p - 2;
    while (e > 0) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<int>(acc);
}

namespace {

// Row reduction in place; returns pivot columns.
std::vector<int> reduce(GfpMatrix& m) {
    const int p = m.p;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pr = -1;
        for (int r = row; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(pr, c), m.at(row, c));
        int inv = gfp_inv_scalar(p, m.at(row, col));
        for (int c = 0; c < m.cols; ++c) m.at(row, c) = static_cast<int>(1LL * m.at(row, c) * inv % p);
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            int f = m.at(r, col);
            for (int c = 0; c < m.cols; ++c) {
                long long v = m.at(r, c) - 1LL * f * m.at(row, c);
                m.at(r, c) = static_cast<int>(((v % p) + p) % p);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int gfp_rank(GfpMatrix m) { return static_cast<int>(reduce(m).size()); }

std::optional<GfpMatrix> gfp_inverse(const GfpMatrix& m) {
    assert(m.rows == m.cols);
    const int n = m.rows;
    GfpMatrix aug = GfpMatrix::zero(m.p, n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = 1;
    }
    std::vector<int> piv = reduce(aug);
    if (static_cast<int>(piv.size()) != n || piv.back() != n - 1) return std::nullopt;
    GfpMatrix out = GfpMatrix::zero(m.p, n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out.at(r, c) = aug.at(r, n + c);
    return out;
}

std::vector<int> gfp_mat_vec(const GfpMatrix& m, const std::vector<int>& v) {
    assert(static_cast<int>(v.size()) == m.cols);
    std::vector<int> out(m.rows, 0);
    for (int r = 0; r < m.rows; ++r) {
        long long acc = 0;
        for (int c = 0; c < m.cols; ++c) acc += 1LL * m.at(r, c) * v[c];
        out[r] = static_cast<int>(acc % m.p);
    }
    return out;
}

GfpMatrix gfp_mat_mul(const GfpMatrix& a, const GfpMatrix& b) {
    assert(a.cols == b.rows && a.p == b.p);
    GfpMatrix out = GfpMatrix::zero(a.p, a.rows, b.cols);
    for (int r = 0; r < a.rows; ++r)
        for (int k = 0; k < a.cols; ++k) {
            int av = a.at(r, k);
            if (av == 0) continue;
            for (int c = 0; c < b.cols; ++c)
                out.at(r, c) = static_cast<int>((out.at(r, c) + 1LL * av * b.at(k, c)) % a.p);
        }
    return out;
}

std::optional<std::vector<int>> gfp_solve(const GfpMatrix& m, const std::vector<int>& b) {
    assert(static_cast<int>(b.size()) == m.rows);
    GfpMatrix aug = GfpMatrix::zero(m.p, m.rows, m.cols + 1);
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols) = ((b[r] % m.p) + m.p) % m.p;
    }
    std::vector<int> piv = reduce(aug);
    // Inconsistent iff a pivot lands in the augmented column.
    if (!piv.empty() && piv.back() == m.cols) return std::nullopt;
    std::vector<int> x(m.cols, 0);
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug.at(static_cast<int>(i), m.cols);
    return x;
}

}  // namespace dbt
