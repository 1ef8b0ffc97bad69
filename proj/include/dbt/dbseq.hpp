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

#ifndef DBT_DBSEQ_HPP
#define DBT_DBSEQ_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "dbt/gf.hpp"

namespace dbt {

/// Nonzero De Bruijn sequence over GF(p^m): length p^n - 1, cyclic windows
/// of length n/m enumerate every nonzero (n/m)-tuple over GF(p^m) once.
/// Symbols are subfield elements represented in the big field.
struct DBSequence {
    int m = 1;       // symbol alphabet GF(p^m)
    int window = 1;  // n / m
    Element lambda;
    std::vector<Element> symbols;   // length p^n - 1
    std::vector<Element> feedback;  // length n/m, over GF(p^m)
};

/// s_i = tr_{GF(p^n)/GF(p^m)}(lambda * alpha^i). The punctured (length
/// p^n - 1) form is canonical.
DBSequence db_sequence(const FieldCtx& F, int m = 1, std::optional<Element> lambda = std::nullopt);

/// Negated low coefficients of the minimal polynomial of alpha over GF(p^m).
std::vector<Element> feedback_vector(const FieldCtx& F, int m);

/// Emits `count` further symbols of the recurrence
/// s_{i+d} = sum_k feedback[k] * s_{i+k}.
std::vector<Element> lfsr_extend(const FieldCtx& F, const std::vector<Element>& seed,
                                 const std::vector<Element>& feedback, uint64_t count);

/// Smallest r >= 0 with b(i) = a(r+i mod len), or nullopt.
std::optional<uint64_t> shift_of(const std::vector<Element>& a, const std::vector<Element>& b);

/// Inserts one zero into the earliest maximal zero run (which must have
/// length window-1), producing a full De Bruijn sequence of length p^n.
std::vector<Element> lift_to_full(const FieldCtx& F, const std::vector<Element>& symbols, int window);

/// Coordinate expansion of a sequence over GF(p^m): m rows, column j is the
/// symbol written in the power basis of the canonical subfield generator
/// (top row = constant coefficient).
struct Strip {
    int rows = 1;
    std::vector<std::vector<int>> cells;  // rows x len
};

Strip to_strip(const FieldCtx& F, const std::vector<Element>& symbols, int m);

/// DB_beta: the trace De Bruijn sequence of the subfield GF(p^m) itself,
/// (tr_{GF(p^m)/GF(p)}(beta^i)) for i < p^m - 1, beta the canonical
/// subfield generator.
std::vector<int> subfield_trace_sequence(const FieldCtx& F, int m);

}  // namespace dbt

#endif
