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

#include "dbt/io.hpp"

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

}  // namespace

TEST_CASE("grid text, csv, and bitmap exports") {
    FieldCtx F = FieldCtx::make(2, 4);
    Torus torus = build_torus(F, 3, 5, F.one());

    CHECK(format_grid_text(F, torus) ==
          "2 4 3 5 poly:[1,0,0,0] poly:[1,1,0,0,1]\n"
          "0 1 1 1 1\n"
          "0 0 1 1 0\n"
          "0 1 0 0 1\n");
    CHECK(format_grid_csv(torus) == "0,1,1,1,1\n0,0,1,1,0\n0,1,0,0,1\n");
    CHECK(format_grid_pbm(F, torus) ==
          "P1\n5 3\n"
          "0 1 1 1 1\n"
          "0 0 1 1 0\n"
          "0 1 0 0 1\n");

    FieldCtx G = FieldCtx::make(3, 2);
    Torus tri = build_torus(G, 1, 8, G.one());
    CHECK(throws_kind(errc::odd_characteristic, [&] { format_grid_pbm(G, tri); }));
}

TEST_CASE("torus json round-trip") {
    FieldCtx F = FieldCtx::make(2, 4);
    Torus torus = build_torus(F, 3, 5, F.one());
    ColumnReport report = classify_columns(F, torus, 2);

    ordered_json j = torus_to_json(F, torus, &report);
    CHECK(j["s"] == 3);
    CHECK(j["t"] == 5);
    CHECK(j["column_report"]["zero_columns"] == 1);
    CHECK(j["column_report"]["columns"][0] == "zero");
    CHECK(j["column_report"]["columns"][2] == "shift:1");
    CHECK(j["column_report"]["counts"]["1"] == 2);

    auto [G, rebuilt] = torus_from_json(j);
    CHECK(rebuilt.values == torus.values);
    CHECK(G.order() == F.order());

    j["values"][0][0] = 1;  // tampered grid must be rejected
    CHECK_THROWS_AS(torus_from_json(j), error);
}

TEST_CASE("sequence file format") {
    FieldCtx F = FieldCtx::make(2, 4);
    DBSequence seq = db_sequence(F, 1, F.one());
    std::string text = format_sequence(F, seq, seq.symbols);
    CHECK(text == "2 4 1 poly:[1,0,0,0] 1,1,0,0\n0 0 0 1 0 0 1 1 0 1 0 1 1 1 1\n");
}

TEST_CASE("pattern files") {
    Pattern pat = make_pattern({{0, 0}, {1, 2}});
    CHECK(format_pattern(pat) == "0 0\n1 2\n");
    CHECK(parse_pattern_text("# corner\n0 0\n\n1 2 # tail\n") == pat);
    CHECK(parse_nd_pattern_text("0 0 1 2\n# skip\n3 1 0 0\n") ==
          std::vector<std::vector<int>>{{0, 0, 1, 2}, {3, 1, 0, 0}});
}

TEST_CASE("certificate export") {
    FieldCtx F = FieldCtx::make(2, 4);
    Torus torus = build_torus(F, 3, 5, F.one());
    SamplingCertificate cert = make_certificate(F, torus, kronecker_pattern(F, 2));
    ordered_json j = certificate_to_json(cert);
    CHECK(j["offsets"].size() == 4);
    CHECK(j["phi"].size() == 4);
    CHECK(j["phi_inverse"][0].size() == 4);
}

TEST_CASE("tensor exports") {
    FieldCtx F = FieldCtx::make(2, 4);
    NTorus nt = build_ntorus(F, {3, 5}, F.one());
    std::string text = format_ntorus_text(F, nt);
    CHECK(text == "2 4 poly:[1,0,0,0] 3 5\n0 1 1 1 1 0 0 1 1 0 0 1 0 0 1\n");
    ordered_json j = ntorus_to_json(F, nt);
    CHECK(j["dims"] == std::vector<int>{3, 5});
    CHECK(j["values"].size() == 15);
}
