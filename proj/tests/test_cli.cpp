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

#include <cstdio>
#include <fstream>
#include <string>

#include "dbt/io.hpp"

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(CLI_BIN_PATH) + " " + args + " 2>&1";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, got);
    int st = pclose(f);
    r.code = WEXITSTATUS(st);
    return r;
}

}  // namespace

TEST_CASE("value grid generation") {
    RunResult r = run("torus generate -p 2 -n 4 -s 3 -t 5 --lambda 1 --format text");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "2 4 3 5 poly:[1,0,0,0] poly:[1,1,0,0,1]\n"
          "0 1 1 1 1\n"
          "0 0 1 1 0\n"
          "0 1 0 0 1\n");
    // deterministic output: a second run is byte-identical
    CHECK(run("torus generate -p 2 -n 4 -s 3 -t 5 --lambda 1 --format text").out == r.out);
}

TEST_CASE("grid export formats") {
    CHECK(run("torus generate -p 2 -n 4 -s 3 -t 5 --format csv").out ==
          "0,1,1,1,1\n0,0,1,1,0\n0,1,0,0,1\n");
    CHECK(run("torus generate -p 2 -n 4 -s 3 -t 5 --format pbm").out ==
          "P1\n5 3\n0 1 1 1 1\n0 0 1 1 0\n0 1 0 0 1\n");
    RunResult bad = run("torus generate -p 3 -n 2 -s 1 -t 8 --format pbm");
    CHECK(bad.code == 2);
    CHECK(bad.out.find("OddCharacteristic") != std::string::npos);
}

TEST_CASE("json round-trip preserves the torus") {
    RunResult r = run("torus generate -p 2 -n 4 -s 3 -t 5 --format json");
    CHECK(r.code == 0);
    auto [F, torus] = dbt::torus_from_json(dbt::ordered_json::parse(r.out));
    dbt::Torus direct = dbt::build_torus(F, 3, 5, F.one());
    CHECK(torus.exponents == direct.exponents);
    CHECK(torus.values == direct.values);
}

TEST_CASE("update rule for the rightward shift") {
    RunResult r =
        run("update matrix -p 2 -n 4 -s 3 -t 5 --pattern kronecker:2 --shift 0,1 --new-cells");
    CHECK(r.code == 0);
    CHECK(r.out == "1 1 0 1\n0 1 1 0\n");
}

TEST_CASE("decoding and its rejections") {
    RunResult ok = run("decode -p 2 -n 4 -s 3 -t 5 --pattern kronecker:2 --values 1,1,0,1");
    CHECK(ok.code == 0);
    CHECK(ok.out == "0 1\n");

    RunResult zero = run("decode -p 2 -n 4 -s 3 -t 5 --pattern kronecker:2 --values 0,0,0,0");
    CHECK(zero.code == 2);
    CHECK(zero.out.find("AllZeroPattern") != std::string::npos);
}

TEST_CASE("field commands") {
    CHECK(run("field find -p 2 -n 4").out == "poly:[1,1,0,0,1]\n");
    RunResult d = run("field describe -p 3 -n 2");
    CHECK(d.out == "p 3\nn 2\nsize 9\norder 8\nmodulus poly:[2,1,1]\ntables yes\n");
    RunResult bad = run("field find -p 4 -n 2");
    CHECK(bad.code == 2);
    CHECK(bad.out.find("NonPrimeP") != std::string::npos);
}

TEST_CASE("sequence commands") {
    CHECK(run("seq generate -p 2 -n 4").out ==
          "2 4 1 poly:[1,0,0,0] 1,1,0,0\n0 0 0 1 0 0 1 1 0 1 0 1 1 1 1\n");
    // zero-inserted strip over GF(4) from the quartic field
    CHECK(run("seq strip -p 2 -n 4 -m 2 --full").out ==
          "0 0 1 1 1 1 0 0 0 1 0 0 1 1 0 1\n"
          "0 0 0 0 1 0 0 1 1 0 1 0 1 1 1 1\n");
    RunResult lifted = run("seq lift -p 2 -n 4");
    CHECK(lifted.out.substr(lifted.out.find('\n') + 1) == "0 0 0 0 1 0 0 1 1 0 1 0 1 1 1 1\n");
}

TEST_CASE("column classification output") {
    CHECK(run("torus classify -p 2 -n 4 -s 3 -t 5 -m 2").out ==
          "0 zero\n1 shift:2\n2 shift:1\n3 shift:1\n4 shift:2\n"
          "zero_columns 1\ncount 1 2\ncount 2 2\n");
    RunResult j = run("torus classify -p 2 -n 4 -s 3 -t 5 -m 2 --format json");
    auto parsed = dbt::ordered_json::parse(j.out);
    CHECK(parsed["columns"][0] == "zero");
    CHECK(parsed["factors"].size() == 3);
}

TEST_CASE("pattern commands") {
    CHECK(run("pattern kronecker -p 2 -n 4 -m 2").out == "0 0\n0 1\n1 0\n1 1\n");
    CHECK(run("pattern check -p 2 -n 4 -s 3 -t 5 --pattern kronecker:2").out ==
          "independent yes\nbasis yes\nsampling yes\n");
    CHECK(run("pattern check -p 2 -n 4 -s 3 -t 5 --pattern '0,0;1,0;2,0;0,1'").out ==
          "independent no\nbasis no\nsampling no\n");
    CHECK(run("pattern extend -p 2 -n 4 -s 3 -t 5 --pattern '0,0;1,1'").out == "0 1\n");
    CHECK(run("pattern build -p 2 -n 4 -s 3 -t 5 --pattern '0,0;1,1'").out ==
          "0 0\n0 1\n1 1\n1 2\n");

    std::ofstream("pattern_cli_test.txt") << "# block\n0 0\n0 1\n1 0\n1 1\n";
    CHECK(run("pattern check -p 2 -n 4 -s 3 -t 5 --pattern-file pattern_cli_test.txt").out ==
          "independent yes\nbasis yes\nsampling yes\n");
    std::remove("pattern_cli_test.txt");
}

TEST_CASE("extended grid command") {
    CHECK(run("torus extend -p 2 -n 4 -s 3 -t 5 --pattern kronecker:2").out ==
          "0 1 1 1 1 0\n0 0 1 1 0 0\n0 1 0 0 1 0\n0 1 1 1 1 0\n");
    CHECK(run("torus extend -p 2 -n 4 -s 3 -t 5 --pattern '0,0;0,1;0,2;1,0'").out ==
          "0 1 1 1 1 0 1\n0 0 1 1 0 0 0\n0 1 0 0 1 0 1\n0 1 1 1 1 0 1\n");
}

TEST_CASE("tensor commands") {
    CHECK(run("ntorus generate -p 2 -n 4 --dims 3,5").out ==
          "2 4 poly:[1,0,0,0] 3 5\n0 1 1 1 1 0 0 1 1 0 0 1 0 0 1\n");
    RunResult bad = run("ntorus generate -p 2 -n 4 --dims 3,6");
    CHECK(bad.code == 2);
    CHECK(bad.out.find("NotCoprime") != std::string::npos);

    std::ofstream("nd_cli_test.txt") << "0 0\n0 1\n1 0\n1 1\n";
    CHECK(run("ntorus check -p 2 -n 4 --dims 3,5 --pattern-file nd_cli_test.txt").out ==
          "sampling yes\n");
    std::remove("nd_cli_test.txt");
}

TEST_CASE("usage errors exit 1") {
    CHECK(run("").code == 1);
    CHECK(run("torus generate -p 2 -n 4").code == 1);  // missing -s/-t
    CHECK(run("bogus").code == 1);
}

TEST_CASE("discrete log table cap override") {
    std::string cmd = "TORUS_TABLE_CAP=1 " + std::string(CLI_BIN_PATH) +
                      " torus generate -p 2 -n 4 -s 3 -t 5 --format csv";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, got);
    pclose(f);
    CHECK(out == "0,1,1,1,1\n0,0,1,1,0\n0,1,0,0,1\n");
}
