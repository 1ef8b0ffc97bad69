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

#include "dbt/dbseq.hpp"

#include <algorithm>

namespace dbt {

DBSequence db_sequence(const FieldCtx& F, int m, std::optional<Element> lambda) {
    if (m < 1 || F.n() % m != 0) throw error(errc::not_a_divisor, "m must divide n");
    if (m == F.n() && F.n() > 1) throw error(errc::not_proper_tower, "target subfield equals the field");
    Element lam = lambda.value_or(F.one());
    if (F.is_zero(lam)) throw error(errc::zero_form, "lambda is zero");

    DBSequence seq;
    seq.m = m;
    seq.window = F.n() / m;
    seq.lambda = lam;
    seq.feedback = feedback_vector(F, m);
    seq.symbols.reserve(F.order());
    Element cur = lam;
    Element al = F.alpha();
    for (uint64_t i = 0; i < F.order(); ++i) {
        seq.symbols.push_back(F.trace_to_subfield(m, cur));
        cur = F.mul(cur, al);
    }
    return seq;
}

std::vector<Element> feedback_vector(const FieldCtx& F, int m) {
    if (m < 1 || F.n() % m != 0) throw error(errc::not_a_divisor, "m must divide n");
    if (m == F.n() && F.n() > 1) throw error(errc::not_proper_tower, "degree-1 tower has no recurrence");
    SubfieldPoly f = F.minimal_poly(m, F.alpha());
    std::vector<Element> fb;
    fb.reserve(f.degree());
    for (int k = 0; k < f.degree(); ++k) fb.push_back(F.neg(f.coeffs[k]));
    return fb;
}

std::vector<Element> lfsr_extend(const FieldCtx& F, const std::vector<Element>& seed,
                                 const std::vector<Element>& feedback, uint64_t count) {
    if (seed.size() != feedback.size()) throw error(errc::wrong_size, "seed length must equal feedback length");
    bool all_zero = std::all_of(seed.begin(), seed.end(), [&](const Element& e) { return F.is_zero(e); });
    if (all_zero) throw error(errc::all_zero_seed, "all-zero seed generates the excluded zero orbit");

    const size_t d = seed.size();
    std::vector<Element> state = seed;
    std::vector<Element> out;
    out.reserve(count);
    for (uint64_t i = 0; i < count; ++i) {
        Element next = F.zero();
        for (size_t k = 0; k < d; ++k) next = F.add(next, F.mul(feedback[k], state[k]));
        out.push_back(next);
        state.erase(state.begin());
        state.push_back(next);
    }
    return out;
}

std::optional<uint64_t> shift_of(const std::vector<Element>& a, const std::vector<Element>& b) {
    if (a.size() != b.size()) throw error(errc::wrong_size, "sequences differ in length");
    const size_t len = a.size();
    for (size_t r = 0; r < len; ++r) {
        bool ok = true;
        for (size_t i = 0; i < len && ok; ++i) ok = a[(r + i) % len] == b[i];
        if (ok) return r;
    }
    return std::nullopt;
}

std::vector<Element> lift_to_full(const FieldCtx& F, const std::vector<Element>& symbols, int window) {
    const size_t len = symbols.size();
    if (window < 2) throw error(errc::no_zero_run, "window too short to lift");
    size_t zero_count = 0;
    for (const Element& s : symbols) zero_count += F.is_zero(s) ? 1 : 0;
    if (zero_count == 0 || zero_count == len) throw error(errc::no_zero_run, "no insertable zero run");

    // Cyclic zero runs: (start index, length), starts where predecessor is nonzero.
    size_t best_start = len;
    size_t max_len = 0;
    for (size_t i = 0; i < len; ++i) {
        if (!F.is_zero(symbols[i]) || F.is_zero(symbols[(i + len - 1) % len])) continue;
        size_t run = 0;
        while (F.is_zero(symbols[(i + run) % len])) ++run;
        if (run > max_len) max_len = run;
    }
    if (max_len != static_cast<size_t>(window - 1))
        throw error(errc::no_zero_run, "maximal zero run is not window-1 symbols long");
    for (size_t i = 0; i < len; ++i) {
        if (!F.is_zero(symbols[i]) || F.is_zero(symbols[(i + len - 1) % len])) continue;
        size_t run = 0;
        while (F.is_zero(symbols[(i + run) % len])) ++run;
        if (run == max_len) {
            best_start = i;
            break;
        }
    }
    std::vector<Element> out = symbols;
    out.insert(out.begin() + static_cast<long>(best_start), F.zero());
    return out;
}

Strip to_strip(const FieldCtx& F, const std::vector<Element>& symbols, int m) {
    Strip strip;
    strip.rows = m;
    strip.cells.assign(m, std::vector<int>(symbols.size(), 0));
    for (size_t j = 0; j < symbols.size(); ++j) {
        std::vector<int> coords = F.subfield_coords(m, symbols[j]);
        for (int r = 0; r < m; ++r) strip.cells[r][j] = coords[r];
    }
    return strip;
}

std::vector<int> subfield_trace_sequence(const FieldCtx& F, int m) {
    Element beta = F.subfield_generator(m);
    uint64_t s = 1;
    for (int i = 0; i < m; ++i) s *= static_cast<uint64_t>(F.p());
    s -= 1;
    std::vector<int> out;
    out.reserve(s);
    Element cur = F.one();
    for (uint64_t i = 0; i < s; ++i) {
        out.push_back(F.subfield_trace_to_prime(m, cur));
        cur = F.mul(cur, beta);
    }
    return out;
}

}  // namespace dbt
