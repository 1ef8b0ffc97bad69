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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>
#include <set>

#include "dbt/pattern.hpp"

using namespace dbt;

namespace {

bool throws_kind(errc kind, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const error& e) {
        return e.kind() == kind;
    }
    return false;
}

// apply the linear rule to a value pattern
std::vector<int> apply_rule(int p, const UpdateMatrix& um, const std::vector<int>& in) {
    std::vector<int> out;
    for (const auto& row : um.coeffs) {
        int acc = 0;
        for (size_t k = 0; k < row.size(); ++k) acc += row[k] * in[k];
        out.push_back(acc % p);
    }
    return out;
}

}  // namespace

TEST_CASE("pattern basics") {
    Pattern pat = make_pattern({{1, 2}, {0, 0}, {0, 3}});
    CHECK(pat.offsets == std::vector<std::pair<int, int>>{{0, 0}, {0, 3}, {1, 2}});
    CHECK(pat.extent_rows() == 1);
    CHECK(pat.extent_cols() == 3);
    CHECK(throws_kind(errc::wrong_size, [] { make_pattern({}); }));
    CHECK(throws_kind(errc::wrong_size, [] { make_pattern({{0, 0}, {0, 0}}); }));

    Pattern moved = translate_pattern(pat, 2, 4, 3, 5);
    CHECK(moved.offsets == std::vector<std::pair<int, int>>{{0, 1}, {2, 2}, {2, 4}});
}

TEST_CASE("elements under a pattern") {
    FieldCtx F = FieldCtx::make(2, 4);
    Torus torus = build_torus(F, 3, 5, F.one());

    std::vector<Element> block = elements_of(F, torus, kronecker_pattern(F, 2));
    REQUIRE(block.size() == 4);
    CHECK(block[0] == F.from_pow(0));
    CHECK(block[1] == F.from_pow(3));
    CHECK(block[2] == F.from_pow(5));
    CHECK(block[3] == F.from_pow(8));

    CHECK(elements_of(F, torus, make_pattern({{2, 4}}))[0] == F.from_pow(7));
    CHECK(throws_kind(errc::out_of_bounds,
                      [&] { elements_of(F, torus, make_pattern({{3, 0}})); }));
}

TEST_CASE("independence and the sampling property") {
    FieldCtx F = FieldCtx::make(2, 4);
    Torus torus = build_torus(F, 3, 5, F.one());

    Pattern block = kronecker_pattern(F, 2);
    CHECK(is_basis(F, torus, block));
    CHECK(verify_sampling(F, torus, block));

    // 1 + alpha^5 + alpha^10 = 0, so the first column plus one cell is dependent.
    Pattern dependent = make_pattern({{0, 0}, {1, 0}, {2, 0}, {0, 1}});
    CHECK(is_independent(F, torus, make_pattern({{0, 0}, {1, 0}})));
    CHECK_FALSE(is_basis(F, torus, dependent));
    CHECK_FALSE(verify_sampling(F, torus, dependent));

    CHECK_FALSE(is_basis(F, torus, make_pattern({{0, 0}, {0, 1}, {0, 2}})));
    CHECK(throws_kind(errc::wrong_size,
                      [&] { verify_sampling(F, torus, make_pattern({{0, 0}})); }));
}

TEST_CASE("rank test matches the brute-force oracle on every 4-subset") {
    FieldCtx F = FieldCtx::make(2, 4);
    Torus torus = build_torus(F, 3, 5, F.one());
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 5; ++j) cells.emplace_back(i, j);

    int bases = 0;
    for (size_t a = 0; a < cells.size(); ++a)
        for (size_t b = a + 1; b < cells.size(); ++b)
            for (size_t c = b + 1; c < cells.size(); ++c)
                for (size_t d = c + 1; d < cells.size(); ++d) {
                    Pattern pat = make_pattern({cells[a], cells[b], cells[c], cells[d]});
                    bool basis = is_basis(F, torus, pat);
                    CHECK(basis == verify_sampling(F, torus, pat));
                    bases += basis;
                }
    CHECK(bases > 0);
}

TEST_CASE("translates scale the element set") {
    FieldCtx F = FieldCtx::make(2, 6);
    Torus torus = build_torus(F, 7, 9, F.one());
    Pattern pat = make_pattern({{0, 0}, {2, 3}, {5, 1}, {6, 8}});
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 20; ++trial) {
        int a = static_cast<int>(rng() % 7), b = static_cast<int>(rng() % 9);
        Element y = F.from_pow((9ull * a + 7ull * b) % 63);
        std::vector<Element> base = elements_of(F, torus, pat);
        std::multiset<uint64_t> scaled, moved;
        for (const Element& e : base) scaled.insert(F.pack(F.mul(y, e)));
        for (const Element& e :
             elements_of(F, torus, translate_pattern(pat, a, b, 7, 9)))
            moved.insert(F.pack(e));
        CHECK(scaled == moved);
    }
}

TEST_CASE("rectangular basis patterns") {
    FieldCtx F = FieldCtx::make(2, 4);
    CHECK(kronecker_pattern(F, 2).offsets ==
          std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(kronecker_pattern(F, 1).offsets ==
          std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {0, 2}, {0, 3}});
    CHECK(kronecker_pattern(F, 4).offsets ==
          std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {2, 0}, {3, 0}});

    CHECK(is_basis(F, build_torus(F, 1, 15, F.one()), kronecker_pattern(F, 1)));
    CHECK(is_basis(F, build_torus(F, 15, 1, F.one()), kronecker_pattern(F, 4)));

    FieldCtx G = FieldCtx::make(2, 6);
    CHECK(is_basis(G, build_torus(G, 7, 9, G.one()), kronecker_pattern(G, 3)));
    CHECK(throws_kind(errc::not_subfield_regime, [&] { kronecker_pattern(G, 2); }));
}

TEST_CASE("extension shifts") {
    FieldCtx F = FieldCtx::make(2, 4);
    Torus torus = build_torus(F, 3, 5, F.one());
    Pattern s0 = make_pattern({{0, 0}, {1, 1}});

    TranslateOffset shift = find_extension_shift(F, torus, s0, s0);
    CHECK(shift == TranslateOffset{0, 1});

    CHECK(throws_kind(errc::dimension_exceeded, [&] {
        find_extension_shift(F, torus, kronecker_pattern(F, 2), make_pattern({{0, 0}}));
    }));

    // In GF(9) the cells holding 1 and -1 span one line; two copies can never
    // be jointly independent, yet the rank bound alone does not rule it out.
    FieldCtx G = FieldCtx::make(3, 2);
    Torus line = build_torus(G, 1, 8, G.one());
    Pattern pair = make_pattern({{0, 0}, {0, 4}});
    CHECK(throws_kind(errc::no_valid_shift, [&] { find_extension_shift(G, line, pair, pair); }));
}

TEST_CASE("building a basis from a seed shape") {
    FieldCtx F = FieldCtx::make(2, 4);
    Torus torus = build_torus(F, 3, 5, F.one());

    Pattern built = recursive_build(F, torus, make_pattern({{0, 0}, {1, 1}}));
    CHECK(built.offsets == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 1}, {1, 2}});
    CHECK(is_basis(F, torus, built));

    Pattern block = kronecker_pattern(F, 2);
    CHECK(recursive_build(F, torus, block) == block);

    FieldCtx G = FieldCtx::make(2, 6);
    Torus big = build_torus(G, 7, 9, G.one());
    Pattern seed = make_pattern({{0, 0}, {4, 4}, {1, 8}});  // alpha^0, alpha^1, alpha^2
    Pattern full = recursive_build(G, big, seed);
    CHECK(full.offsets.size() == 6);
    CHECK(is_basis(G, big, full));

    CHECK(throws_kind(errc::wrong_size, [&] {
        recursive_build(F, torus, make_pattern({{0, 0}, {0, 1}, {1, 0}}));
    }));
}

TEST_CASE("update rule for a right shift of the 2x2 block") {
    FieldCtx F = FieldCtx::make(2, 4);
    Torus torus = build_torus(F, 3, 5, F.one());
    Pattern block = kronecker_pattern(F, 2);

    SUBCASE("new cells only") {
        Pattern fresh = new_cells(block, {0, 1}, 3, 5);
        CHECK(fresh.offsets == std::vector<std::pair<int, int>>{{0, 1}, {1, 1}});
        UpdateMatrix um = update_matrix(F, torus, block, {0, 1}, fresh);
        CHECK(um.coeffs == std::vector<std::vector<int>>{{1, 1, 0, 1}, {0, 1, 1, 0}});
        CHECK(um.carry_map == std::vector<int>{-1, -1});
    }
    SUBCASE("full pattern") {
        UpdateMatrix um = update_matrix(F, torus, block, {0, 1});
        CHECK(um.carry_map == std::vector<int>{1, -1, 3, -1});
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 5; ++b)
                CHECK(apply_rule(2, um, read_pattern(torus, block, a, b)) ==
                      read_pattern(torus, block, a, b + 1));
    }
    SUBCASE("zero shift is the identity") {
        UpdateMatrix um = update_matrix(F, torus, block, {0, 0});
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) CHECK(um.coeffs[r][c] == (r == c ? 1 : 0));
        CHECK(um.carry_map == std::vector<int>{0, 1, 2, 3});
    }
    SUBCASE("carried cells agree with the coefficients") {
        UpdateMatrix um = update_matrix(F, torus, block, {1, 0});
        for (size_t k = 0; k < um.carry_map.size(); ++k) {
            if (um.carry_map[k] < 0) continue;
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 5; ++b) {
                    std::vector<int> in = read_pattern(torus, block, a, b);
                    CHECK(apply_rule(2, um, in)[k] == in[um.carry_map[k]]);
                }
        }
    }
    CHECK(throws_kind(errc::not_a_basis, [&] {
        update_matrix(F, torus, make_pattern({{0, 0}, {1, 0}, {2, 0}, {0, 1}}), {0, 1});
    }));
}

TEST_CASE("update rules compose and cover all cardinal shifts") {
    FieldCtx F = FieldCtx::make(2, 6);
    Torus torus = build_torus(F, 7, 9, F.one());
    Pattern block = kronecker_pattern(F, 3);
    for (auto shift : std::vector<std::pair<int, int>>{{0, 1}, {0, -1}, {1, 0}, {-1, 0}}) {
        UpdateMatrix um = update_matrix(F, torus, block, shift);
        for (int a = 0; a < 7; ++a)
            for (int b = 0; b < 9; ++b)
                CHECK(apply_rule(2, um, read_pattern(torus, block, a, b)) ==
                      read_pattern(torus, block, a + shift.first, b + shift.second));
    }

    UpdateMatrix right = update_matrix(F, torus, block, {0, 1});
    UpdateMatrix twice = update_matrix(F, torus, block, {0, 2});
    for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 9; ++b) {
            std::vector<int> in = read_pattern(torus, block, a, b);
            CHECK(apply_rule(2, twice, in) == apply_rule(2, right, apply_rule(2, right, in)));
        }
}

TEST_CASE("decoding positions from value patterns") {
    FieldCtx F = FieldCtx::make(2, 4);
    Torus torus = build_torus(F, 3, 5, F.one());
    SamplingCertificate cert = make_certificate(F, torus, kronecker_pattern(F, 2));

    CHECK(decode(F, torus, cert, {0, 1, 0, 0}) == TranslateOffset{0, 0});
    CHECK(decode(F, torus, cert, {1, 1, 0, 1}) == TranslateOffset{0, 1});

    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 5; ++b)
            CHECK(decode(F, torus, cert, read_pattern(torus, cert.pattern, a, b)) ==
                  TranslateOffset{a, b});

    CHECK(throws_kind(errc::wrong_size, [&] { decode(F, torus, cert, {0, 1, 0}); }));
    CHECK(throws_kind(errc::all_zero_pattern, [&] { decode(F, torus, cert, {0, 0, 0, 0}); }));
    CHECK(throws_kind(errc::not_a_basis, [&] {
        make_certificate(F, torus, make_pattern({{0, 0}, {1, 0}, {2, 0}, {0, 1}}));
    }));
}

TEST_CASE("decoding on a larger torus with a built pattern") {
    FieldCtx F = FieldCtx::make(2, 6);
    Torus torus = build_torus(F, 7, 9, F.one());
    Pattern pat = recursive_build(F, torus, make_pattern({{0, 0}, {1, 1}}));
    SamplingCertificate cert = make_certificate(F, torus, pat);
    for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 9; ++b)
            CHECK(decode(F, torus, cert, read_pattern(torus, cert.pattern, a, b)) ==
                  TranslateOffset{a, b});
}
