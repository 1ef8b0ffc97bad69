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

#include "dbt/pattern.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dbt {

namespace {

int mod_inverse(int a, int m) {
    // extended Euclid; gcd(a, m) = 1
    int t = 0, newt = 1, r = m, newr = ((a % m) + m) % m;
    while (newr != 0) {
        int q = r / newr;
        int tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw std::logic_error("mod_inverse: not coprime");
    return ((t % m) + m) % m;
}

GfpMatrix coords_matrix(const FieldCtx& F, const std::vector<Element>& elems) {
    GfpMatrix m = GfpMatrix::zero(F.p(), static_cast<int>(elems.size()), F.n());
    for (size_t r = 0; r < elems.size(); ++r)
        for (int c = 0; c < F.n(); ++c) m.at(static_cast<int>(r), c) = elems[r].c[c];
    return m;
}

}  // namespace

int Pattern::extent_rows() const {
    auto [lo, hi] = std::minmax_element(offsets.begin(), offsets.end(),
                                        [](auto& a, auto& b) { return a.first < b.first; });
    return hi->first - lo->first;
}

int Pattern::extent_cols() const {
    auto [lo, hi] = std::minmax_element(offsets.begin(), offsets.end(),
                                        [](auto& a, auto& b) { return a.second < b.second; });
    return hi->second - lo->second;
}

Pattern make_pattern(std::vector<std::pair<int, int>> offsets) {
    if (offsets.empty()) throw error(errc::wrong_size, "pattern must have at least one offset");
    std::sort(offsets.begin(), offsets.end());
    if (std::adjacent_find(offsets.begin(), offsets.end()) != offsets.end())
        throw error(errc::wrong_size, "pattern offsets must be distinct");
    return Pattern{std::move(offsets)};
}

Pattern translate_pattern(const Pattern& pat, int a, int b, int s, int t) {
    std::vector<std::pair<int, int>> out;
    out.reserve(pat.offsets.size());
    for (auto [i, j] : pat.offsets)
        out.emplace_back((((i + a) % s) + s) % s, (((j + b) % t) + t) % t);
    return make_pattern(std::move(out));
}

std::vector<Element> elements_of(const FieldCtx& F, const Torus& torus, const Pattern& pat) {
    std::vector<Element> out;
    out.reserve(pat.offsets.size());
    for (auto [i, j] : pat.offsets) {
        if (i < 0 || i >= torus.s || j < 0 || j >= torus.t)
            throw error(errc::out_of_bounds,
                        "offset (" + std::to_string(i) + "," + std::to_string(j) + ") outside the grid");
        out.push_back(F.from_pow(torus.exponents[i][j]));
    }
    return out;
}

std::vector<int> read_pattern(const Torus& torus, const Pattern& pat, int a, int b) {
    std::vector<int> out;
    out.reserve(pat.offsets.size());
    for (auto [i, j] : pat.offsets)
        out.push_back(torus.values[(((i + a) % torus.s) + torus.s) % torus.s]
                                  [(((j + b) % torus.t) + torus.t) % torus.t]);
    return out;
}

bool is_independent(const FieldCtx& F, const Torus& torus, const Pattern& pat) {
    std::vector<Element> elems = elements_of(F, torus, pat);
    return gfp_rank(coords_matrix(F, elems)) == static_cast<int>(elems.size());
}

bool is_basis(const FieldCtx& F, const Torus& torus, const Pattern& pat) {
    return static_cast<int>(pat.offsets.size()) == F.n() && is_independent(F, torus, pat);
}

bool verify_sampling(const FieldCtx& F, const Torus& torus, const Pattern& pat) {
    if (static_cast<int>(pat.offsets.size()) != F.n())
        throw error(errc::wrong_size, "pattern size must equal n");
    std::set<std::vector<int>> seen;
    for (int a = 0; a < torus.s; ++a)
        for (int b = 0; b < torus.t; ++b) {
            std::vector<int> v = read_pattern(torus, pat, a, b);
            if (std::all_of(v.begin(), v.end(), [](int x) { return x == 0; })) return false;
            if (!seen.insert(std::move(v)).second) return false;
        }
    return true;
}

Pattern kronecker_pattern(const FieldCtx& F, int m) {
    if (m < 1 || F.n() % m != 0) throw error(errc::not_subfield_regime, "m must divide n");
    uint64_t s = 1;
    for (int i = 0; i < m; ++i) s *= static_cast<uint64_t>(F.p());
    s -= 1;
    if (s == 0 || F.order() % s != 0 || std::gcd(s, F.order() / s) != 1)
        throw error(errc::not_subfield_regime, "requires s = p^m - 1 coprime to t");
    std::vector<std::pair<int, int>> offsets;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < F.n() / m; ++j) offsets.emplace_back(i, j);
    return make_pattern(std::move(offsets));
}

TranslateOffset find_extension_shift(const FieldCtx& F, const Torus& torus, const Pattern& s1,
                                     const Pattern& s2) {
    std::vector<Element> e1 = elements_of(F, torus, s1);
    std::vector<Element> e2 = elements_of(F, torus, s2);
    int d1 = gfp_rank(coords_matrix(F, e1));
    int d2 = gfp_rank(coords_matrix(F, e2));
    if (d1 + d2 > F.n())
        throw error(errc::dimension_exceeded,
                    "spanned dimensions " + std::to_string(d1) + "+" + std::to_string(d2) +
                        " exceed n = " + std::to_string(F.n()));
    std::set<std::pair<int, int>> occupied(s1.offsets.begin(), s1.offsets.end());
    for (int a = 0; a < torus.s; ++a)
        for (int b = 0; b < torus.t; ++b) {
            Pattern moved = translate_pattern(s2, a, b, torus.s, torus.t);
            bool disjoint = std::none_of(moved.offsets.begin(), moved.offsets.end(),
                                         [&](auto& o) { return occupied.count(o) > 0; });
            if (!disjoint) continue;
            std::vector<std::pair<int, int>> joint = s1.offsets;
            joint.insert(joint.end(), moved.offsets.begin(), moved.offsets.end());
            if (is_independent(F, torus, make_pattern(std::move(joint)))) return TranslateOffset{a, b};
        }
    throw error(errc::no_valid_shift, "exhausted all toroidal shifts");
}

Pattern recursive_build(const FieldCtx& F, const Torus& torus, const Pattern& s0) {
    int m = static_cast<int>(s0.offsets.size());
    if (m < 1 || F.n() % m != 0) throw error(errc::wrong_size, "|S0| must divide n");
    Pattern result = s0;
    while (static_cast<int>(result.offsets.size()) < F.n()) {
        TranslateOffset shift = find_extension_shift(F, torus, result, s0);
        Pattern moved = translate_pattern(s0, shift.a, shift.b, torus.s, torus.t);
        std::vector<std::pair<int, int>> joint = result.offsets;
        joint.insert(joint.end(), moved.offsets.begin(), moved.offsets.end());
        result = make_pattern(std::move(joint));
    }
    return result;
}

Pattern new_cells(const Pattern& pat, std::pair<int, int> shift, int s, int t) {
    std::set<std::pair<int, int>> members(pat.offsets.begin(), pat.offsets.end());
    std::vector<std::pair<int, int>> out;
    for (auto [i, j] : pat.offsets) {
        std::pair<int, int> target{(((i + shift.first) % s) + s) % s,
                                   (((j + shift.second) % t) + t) % t};
        if (!members.count(target)) out.emplace_back(i, j);
    }
    return make_pattern(std::move(out));
}

UpdateMatrix update_matrix(const FieldCtx& F, const Torus& torus, const Pattern& s_in,
                           std::pair<int, int> shift, std::optional<Pattern> s_out) {
    if (!is_basis(F, torus, s_in)) throw error(errc::not_a_basis, "S_in is not a basis pattern");
    const Pattern out_pat = s_out.value_or(s_in);

    std::vector<Element> basis = elements_of(F, torus, s_in);
    GfpMatrix basis_cols = GfpMatrix::zero(F.p(), F.n(), F.n());
    for (int k = 0; k < F.n(); ++k)
        for (int r = 0; r < F.n(); ++r) basis_cols.at(r, k) = basis[k].c[r];
    auto basis_inv = gfp_inverse(basis_cols);
    if (!basis_inv) throw error(errc::not_a_basis, "basis matrix is singular");

    uint64_t ye = (static_cast<uint64_t>((((1LL * shift.first * torus.t + 1LL * shift.second * torus.s) %
                                           static_cast<int64_t>(F.order())) +
                                          static_cast<int64_t>(F.order())) %
                                         static_cast<int64_t>(F.order())));
    Element y = F.from_pow(ye);

    UpdateMatrix um;
    um.shift = shift;
    std::set<std::pair<int, int>> members(s_in.offsets.begin(), s_in.offsets.end());
    for (auto [oi, oj] : out_pat.offsets) {
        // element of the out cell in the frame of the shifted pattern
        uint64_t e = (static_cast<uint64_t>(torus.t) * (((oi % torus.s) + torus.s) % torus.s) +
                      static_cast<uint64_t>(torus.s) * (((oj % torus.t) + torus.t) % torus.t)) %
                     F.order();
        Element target = F.mul(y, F.from_pow(e));
        um.coeffs.push_back(gfp_mat_vec(*basis_inv, target.c));
        std::pair<int, int> slid{(((oi + shift.first) % torus.s) + torus.s) % torus.s,
                                 (((oj + shift.second) % torus.t) + torus.t) % torus.t};
        if (members.count(slid)) {
            auto it = std::lower_bound(s_in.offsets.begin(), s_in.offsets.end(), slid);
            um.carry_map.push_back(static_cast<int>(it - s_in.offsets.begin()));
        } else {
            um.carry_map.push_back(-1);
        }
    }
    return um;
}

SamplingCertificate make_certificate(const FieldCtx& F, const Torus& torus, const Pattern& pat) {
    if (!is_basis(F, torus, pat)) throw error(errc::not_a_basis, "pattern is not a basis pattern");
    SamplingCertificate cert;
    cert.pattern = pat;
    cert.basis = elements_of(F, torus, pat);
    cert.phi = GfpMatrix::zero(F.p(), F.n(), F.n());
    Element al = F.alpha();
    for (int i = 0; i < F.n(); ++i) {
        Element cur = cert.basis[i];
        for (int k = 0; k < F.n(); ++k) {
            cert.phi.at(i, k) = F.form_value(torus.lambda, cur);
            cur = F.mul(cur, al);
        }
    }
    auto inv = gfp_inverse(cert.phi);
    if (!inv) throw error(errc::not_a_basis, "Phi matrix is singular");
    cert.phi_inverse = *inv;
    return cert;
}

TranslateOffset decode(const FieldCtx& F, const Torus& torus, const SamplingCertificate& cert,
                       const std::vector<int>& values) {
    if (static_cast<int>(values.size()) != F.n())
        throw error(errc::wrong_size, "value vector must have length n");
    if (std::all_of(values.begin(), values.end(), [](int v) { return v == 0; }))
        throw error(errc::all_zero_pattern, "the all-zero pattern is excluded from the torus");
    Element z{gfp_mat_vec(cert.phi_inverse, values)};
    uint64_t e = F.dlog(z);
    int a = static_cast<int>(e % torus.s) * mod_inverse(torus.t, torus.s) % torus.s;
    int b = static_cast<int>(e % torus.t) * mod_inverse(torus.s, torus.t) % torus.t;
    return TranslateOffset{a, b};
}

}  // namespace dbt
