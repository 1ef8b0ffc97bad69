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

#ifndef DBT_PATTERN_HPP
#define DBT_PATTERN_HPP

#include <optional>
#include <utility>
#include <vector>

#include "dbt/gf.hpp"
#include "dbt/linalg.hpp"
#include "dbt/torus.hpp"

namespace dbt {

/// A set of (row, col) torus offsets, kept sorted row-major. Every value
/// read or write uses this order.
struct Pattern {
    std::vector<std::pair<int, int>> offsets;

    int extent_rows() const;  // I = max i - min i
    int extent_cols() const;  // J = max j - min j
    bool operator==(const Pattern&) const = default;
};

struct TranslateOffset {
    int a = 0;
    int b = 0;
    bool operator==(const TranslateOffset&) const = default;
};

Pattern make_pattern(std::vector<std::pair<int, int>> offsets);

/// Toroidal translate of every offset by (a, b).
Pattern translate_pattern(const Pattern& pat, int a, int b, int s, int t);

/// A|_S in row-major offset order.
std::vector<Element> elements_of(const FieldCtx& F, const Torus& torus, const Pattern& pat);

/// Value pattern at translate (a, b), row-major offset order.
std::vector<int> read_pattern(const Torus& torus, const Pattern& pat, int a, int b);

bool is_independent(const FieldCtx& F, const Torus& torus, const Pattern& pat);
bool is_basis(const FieldCtx& F, const Torus& torus, const Pattern& pat);

/// Brute-force sampling oracle: all s*t translate value patterns must be
/// pairwise distinct and nonzero. Independent of the rank route.
bool verify_sampling(const FieldCtx& F, const Torus& torus, const Pattern& pat);

/// Rectangular m x (n/m) pattern of the Kronecker basis {beta^i gamma^j}.
Pattern kronecker_pattern(const FieldCtx& F, int m);

/// First row-major (a, b) such that the translate of s2 is position-disjoint
/// from s1 and the union is linearly independent.
TranslateOffset find_extension_shift(const FieldCtx& F, const Torus& torus, const Pattern& s1,
                                     const Pattern& s2);

/// Union of n/|S0| translates of S0 (first is the identity), each found by
/// find_extension_shift; the result is a basis pattern.
Pattern recursive_build(const FieldCtx& F, const Torus& torus, const Pattern& s0);

/// Linear rule C_y: applying coeffs to the value pattern of S_in at any
/// position x yields the value pattern of S_out at x*y, where S_out offsets
/// are read in the frame of the shifted pattern. carry_map[k] is the index
/// of the S_in cell whose value slides into S_out cell k, or -1 if the cell
/// is newly exposed.
struct UpdateMatrix {
    std::pair<int, int> shift;              // (dy_i, dy_j): y = beta^{dy_i} gamma^{dy_j}
    std::vector<std::vector<int>> coeffs;   // |S_out| x |S_in|
    std::vector<int> carry_map;
};

UpdateMatrix update_matrix(const FieldCtx& F, const Torus& torus, const Pattern& s_in,
                           std::pair<int, int> shift, std::optional<Pattern> s_out = std::nullopt);

/// Cells of `pat` whose translate by `shift` leaves the pattern: the cells a
/// partial update must recompute.
Pattern new_cells(const Pattern& pat, std::pair<int, int> shift, int s, int t);

/// Precomputed inverse of the map Phi(z) = (psi(a_i z)) for decoding.
struct SamplingCertificate {
    Pattern pattern;
    std::vector<Element> basis;  // A|_S in offset order
    GfpMatrix phi;               // n x n over GF(p), power-basis coordinates
    GfpMatrix phi_inverse;
};

SamplingCertificate make_certificate(const FieldCtx& F, const Torus& torus, const Pattern& pat);

/// The unique translate (a, b) whose value pattern equals `values`:
/// z = Phi^{-1}(values), then the discrete log of z splits as
/// a = e t^{-1} mod s, b = e s^{-1} mod t.
TranslateOffset decode(const FieldCtx& F, const Torus& torus, const SamplingCertificate& cert,
                       const std::vector<int>& values);

}  // namespace dbt

#endif
