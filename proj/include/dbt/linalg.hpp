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

#ifndef DBT_LINALG_HPP
#define DBT_LINALG_HPP

#include <optional>
#include <vector>

namespace dbt {

/// Dense matrix over the prime field GF(p), row-major.
struct GfpMatrix {
    int p = 2;
    int rows = 0;
    int cols = 0;
    std::vector<int> a;  // rows*cols entries in [0, p)

    static GfpMatrix zero(int p, int rows, int cols) {
        return GfpMatrix{p, rows, cols, std::vector<int>(static_cast<size_t>(rows) * cols, 0)};
    }
    int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    int at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    bool operator==(const GfpMatrix&) const = default;
};

int gfp_inv_scalar(int p, int v);

int gfp_rank(GfpMatrix m);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<GfpMatrix> gfp_inverse(const GfpMatrix& m);

std::vector<int> gfp_mat_vec(const GfpMatrix& m, const std::vector<int>& v);

GfpMatrix gfp_mat_mul(const GfpMatrix& a, const GfpMatrix& b);

/// A solution of m x = b (any solution when underdetermined), or nullopt if
/// the system is inconsistent.
std::optional<std::vector<int>> gfp_solve(const GfpMatrix& m, const std::vector<int>& b);

}  // namespace dbt

#endif
