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

#ifndef DBT_TORUS_HPP
#define DBT_TORUS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "dbt/gf.hpp"

namespace dbt {

struct Pattern;  // pattern.hpp

/// s x t trace De Bruijn torus: exponent grid A_{i,j} = alpha^{(t i + s j)
/// mod (p^n - 1)} and value grid B_{i,j} = psi(A_{i,j}) with psi = tr(lambda *).
/// Row index i moves along beta = alpha^t, column index j along gamma = alpha^s.
struct Torus {
    int s = 1;
    int t = 1;
    Element lambda;
    std::vector<std::vector<uint64_t>> exponents;  // s x t
    std::vector<std::vector<int>> values;          // s x t over GF(p)
};

/// Requires s*t = p^n - 1 and gcd(s,t) = 1; verifies the exponent bijection.
Torus build_torus(const FieldCtx& F, int s, int t, const Element& lambda);

/// Column classification in the subfield regime s = p^m - 1.
struct ColumnClass {
    bool zero = false;
    int shift = 0;  // valid when !zero, in [0, s)
};

struct ColumnReport {
    std::vector<ColumnClass> columns;     // per column j
    std::vector<SubfieldPoly> factors;    // of x^t - 1 over GF(p^m)
    std::map<int, int> counts;            // shift r -> number of columns
    int zero_columns = 0;
};

/// Labels each column Zero or Shift(r) from the relative trace of gamma^j and
/// verifies the label entrywise against DB_beta; throws on any mismatch.
ColumnReport classify_columns(const FieldCtx& F, const Torus& torus, int m);

/// Factor-based occurrence counts: for each irreducible factor of x^t - 1
/// over GF(p^m), its degree is added to the tally of the shift determined by
/// the relative trace of its roots. `zero_columns` receives the zero-trace
/// tally.
std::map<int, int> occurrence_counts(const FieldCtx& F, int m, int* zero_columns = nullptr);

/// True iff x^2 + beta^i x + 1 has no root in GF(2^m).
bool quadratic_criterion(const FieldCtx& F, int m, int i);

/// Non-toroidal replication sized so every pattern translate is readable
/// without wraparound: (s+I) x (t+J) with I, J the pattern extents.
struct ExtendedGrid {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<int>> values;
};

ExtendedGrid extend_array(const Torus& torus, const Pattern& pattern);

}  // namespace dbt

#endif
