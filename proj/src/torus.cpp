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

#include "dbt/torus.hpp"

#include <numeric>
#include <stdexcept>

#include "dbt/dbseq.hpp"
#include "dbt/pattern.hpp"

namespace dbt {

namespace {

uint64_t sub_size(const FieldCtx& F, int m) {
    uint64_t v = 1;
    for (int i = 0; i < m; ++i) v *= static_cast<uint64_t>(F.p());
    return v;
}

// In the regime s = p^m - 1, maps a nonzero subfield element beta^r to r.
int beta_log(const FieldCtx& F, const Element& tau, uint64_t t, uint64_t s) {
    uint64_t e = F.dlog(tau);
    if (e % t != 0) throw std::logic_error("subfield element has log not divisible by t");
    return static_cast<int>(e / t % s);
}

}  // namespace

Torus build_torus(const FieldCtx& F, int s, int t, const Element& lambda) {
    if (s < 1 || t < 1 || static_cast<uint64_t>(s) * static_cast<uint64_t>(t) != F.order())
        throw error(errc::bad_factorization,
                    "s*t = " + std::to_string(1LL * s * t) + " != p^n - 1 = " + std::to_string(F.order()));
    if (std::gcd(s, t) != 1) throw error(errc::bad_factorization, "gcd(s, t) != 1");
    if (F.is_zero(lambda)) throw error(errc::zero_form, "lambda is zero");

    Torus torus;
    torus.s = s;
    torus.t = t;
    torus.lambda = lambda;
    torus.exponents.assign(s, std::vector<uint64_t>(t, 0));
    torus.values.assign(s, std::vector<int>(t, 0));
    std::vector<char> seen(F.order(), 0);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) {
            uint64_t e = (static_cast<uint64_t>(t) * i + static_cast<uint64_t>(s) * j) % F.order();
            torus.exponents[i][j] = e;
            torus.values[i][j] = F.form_value(lambda, F.from_pow(e));
            if (seen[e]) throw std::logic_error("exponent grid is not a bijection");
            seen[e] = 1;
        }
    return torus;
}

ColumnReport classify_columns(const FieldCtx& F, const Torus& torus, int m) {
    if (m < 1 || F.n() % m != 0 || static_cast<uint64_t>(torus.s) != sub_size(F, m) - 1)
        throw error(errc::not_subfield_regime,
                    "requires s = p^m - 1 with m | n; got s = " + std::to_string(torus.s));
    const uint64_t s = torus.s;
    const uint64_t t = torus.t;
    std::vector<int> db_beta = subfield_trace_sequence(F, m);

    ColumnReport report;
    report.columns.resize(t);
    Element gamma = F.from_pow(s % F.order());
    Element g = torus.lambda;  // lambda * gamma^j
    for (uint64_t j = 0; j < t; ++j) {
        Element tau = F.trace_to_subfield(m, g);
        if (F.is_zero(tau)) {
            report.columns[j] = ColumnClass{true, 0};
            report.zero_columns += 1;
            for (uint64_t i = 0; i < s; ++i)
                if (torus.values[i][j] != 0)
                    throw std::logic_error("zero-trace column has a nonzero entry");
        } else {
            int r = beta_log(F, tau, t, s);
            report.columns[j] = ColumnClass{false, r};
            report.counts[r] += 1;
            for (uint64_t i = 0; i < s; ++i)
                if (torus.values[i][j] != db_beta[(r + i) % s])
                    throw std::logic_error("column does not match the predicted DB_beta shift");
        }
        g = F.mul(g, gamma);
    }
    report.factors = F.factor_unity(m, t);
    return report;
}

std::map<int, int> occurrence_counts(const FieldCtx& F, int m, int* zero_columns) {
    if (m < 1 || F.n() % m != 0) throw error(errc::not_subfield_regime, "m must divide n");
    uint64_t s = sub_size(F, m) - 1;
    if (s == 0 || F.order() % s != 0) throw error(errc::not_subfield_regime, "p^m - 1 must divide p^n - 1");
    uint64_t t = F.order() / s;
    if (std::gcd(s, t) != 1) throw error(errc::not_subfield_regime, "gcd(p^m - 1, t) != 1");

    std::map<int, int> counts;
    int zeros = 0;
    int ext_degree = F.n() / m;
    for (const SubfieldPoly& f : F.factor_unity(m, t)) {
        int d = f.degree();
        // The relative trace of any root repeats the orbit sum (n/m)/d times.
        int mult = (ext_degree / d) % F.p();
        Element orbit_sum = F.neg(f.second_leading());
        Element tau = F.mul(F.scalar(mult), orbit_sum);
        if (F.is_zero(tau))
            zeros += d;
        else
            counts[beta_log(F, tau, t, s)] += d;
    }
    if (zero_columns) *zero_columns = zeros;
    return counts;
}

bool quadratic_criterion(const FieldCtx& F, int m, int i) {
    if (F.p() != 2) throw error(errc::odd_characteristic, "defined for characteristic 2 only");
    if (m < 1 || F.n() % m != 0) throw error(errc::not_a_divisor, "m must divide n");
    Element beta = F.subfield_generator(m);
    Element a = F.pow(beta, i);
    uint64_t sub_order = sub_size(F, m) - 1;
    // x^2 + a x + 1 has no zero root; scan the nonzero subfield elements.
    Element y = F.one();
    for (uint64_t k = 0; k < sub_order; ++k) {
        Element v = F.add(F.add(F.mul(y, y), F.mul(a, y)), F.one());
        if (F.is_zero(v)) return false;
        y = F.mul(y, beta);
    }
    return true;
}

ExtendedGrid extend_array(const Torus& torus, const Pattern& pattern) {
    int I = pattern.extent_rows();
    int J = pattern.extent_cols();
    ExtendedGrid grid;
    grid.rows = torus.s + I;
    grid.cols = torus.t + J;
    grid.values.assign(grid.rows, std::vector<int>(grid.cols, 0));
    for (int i = 0; i < grid.rows; ++i)
        for (int j = 0; j < grid.cols; ++j)
            grid.values[i][j] = torus.values[i % torus.s][j % torus.t];
    return grid;
}

}  // namespace dbt
