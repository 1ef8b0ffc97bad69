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

#include "dbt/ntorus.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "dbt/linalg.hpp"

namespace dbt {

uint64_t NTorus::total() const {
    uint64_t v = 1;
    for (int d : dims) v *= static_cast<uint64_t>(d);
    return v;
}

uint64_t NTorus::flat_index(const std::vector<int>& idx) const {
    uint64_t f = 0;
    for (size_t k = 0; k < dims.size(); ++k) f = f * static_cast<uint64_t>(dims[k]) + static_cast<uint64_t>(idx[k]);
    return f;
}

std::vector<int> NTorus::multi_index(uint64_t flat) const {
    std::vector<int> idx(dims.size());
    for (size_t k = dims.size(); k-- > 0;) {
        idx[k] = static_cast<int>(flat % static_cast<uint64_t>(dims[k]));
        flat /= static_cast<uint64_t>(dims[k]);
    }
    return idx;
}

namespace {

uint64_t exponent_at(const FieldCtx& F, const NTorus& nt, const std::vector<int>& idx) {
    uint64_t e = 0;
    for (size_t k = 0; k < nt.dims.size(); ++k)
        e = (e + nt.gen_exponents[k] % F.order() * (static_cast<uint64_t>(idx[k]) % nt.dims[k])) % F.order();
    return e;
}

}  // namespace

NTorus build_ntorus(const FieldCtx& F, const std::vector<int>& dims, const Element& lambda) {
    if (dims.empty()) throw error(errc::bad_product, "dims must be nonempty");
    for (int d : dims)
        if (d < 1) throw error(errc::bad_product, "dims must be positive");
    for (size_t i = 0; i < dims.size(); ++i)
        for (size_t j = i + 1; j < dims.size(); ++j)
            if (std::gcd(dims[i], dims[j]) != 1)
                throw error(errc::not_coprime, "dims " + std::to_string(dims[i]) + " and " +
                                                   std::to_string(dims[j]) + " share a factor");
    uint64_t prod = 1;
    for (int d : dims) prod *= static_cast<uint64_t>(d);
    if (prod != F.order())
        throw error(errc::bad_product,
                    "product of dims " + std::to_string(prod) + " != p^n - 1 = " + std::to_string(F.order()));
    if (F.is_zero(lambda)) throw error(errc::zero_form, "lambda is zero");

    NTorus nt;
    nt.dims = dims;
    nt.lambda = lambda;
    for (int d : dims) nt.gen_exponents.push_back(F.order() / static_cast<uint64_t>(d));
    nt.values.resize(prod);
    std::vector<char> seen(F.order(), 0);
    for (uint64_t flat = 0; flat < prod; ++flat) {
        uint64_t e = exponent_at(F, nt, nt.multi_index(flat));
        if (seen[e]) throw std::logic_error("index-to-element map is not a bijection");
        seen[e] = 1;
        nt.values[flat] = F.form_value(lambda, F.from_pow(e));
    }
    return nt;
}

Element element_at(const FieldCtx& F, const NTorus& nt, const std::vector<int>& idx) {
    if (idx.size() != nt.dims.size()) throw error(errc::wrong_size, "index rank mismatch");
    return F.from_pow(exponent_at(F, nt, idx));
}

bool verify_sampling_nd(const FieldCtx& F, const NTorus& nt,
                        const std::vector<std::vector<int>>& offsets) {
    if (static_cast<int>(offsets.size()) != F.n())
        throw error(errc::wrong_size, "pattern size must equal n");
    const size_t rank = nt.dims.size();
    for (const auto& o : offsets)
        if (o.size() != rank) throw error(errc::wrong_size, "offset rank mismatch");

    const uint64_t total = nt.total();
    std::set<std::vector<int>> seen;
    bool brute = true;
    std::vector<int> pos(rank);
    for (uint64_t flat = 0; flat < total && brute; ++flat) {
        std::vector<int> a = nt.multi_index(flat);
        std::vector<int> v;
        v.reserve(offsets.size());
        for (const auto& o : offsets) {
            for (size_t k = 0; k < rank; ++k) pos[k] = (a[k] + o[k]) % nt.dims[k];
            v.push_back(nt.values[nt.flat_index(pos)]);
        }
        if (std::all_of(v.begin(), v.end(), [](int x) { return x == 0; }))
            brute = false;
        else if (!seen.insert(std::move(v)).second)
            brute = false;
    }

    // Independent route: the associated elements must form a basis.
    GfpMatrix m = GfpMatrix::zero(F.p(), F.n(), F.n());
    for (size_t r = 0; r < offsets.size(); ++r) {
        Element e = element_at(F, nt, offsets[r]);
        for (int c = 0; c < F.n(); ++c) m.at(static_cast<int>(r), c) = e.c[c];
    }
    bool basis = gfp_rank(m) == F.n();
    if (brute != basis) throw std::logic_error("sampling oracle disagrees with the rank test");
    return brute;
}

}  // namespace dbt
