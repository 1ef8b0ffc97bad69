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

#include "dbt/io.hpp"

#include <sstream>

namespace dbt {

namespace {

std::string join_row(const std::vector<int>& row, char sep) {
    std::ostringstream os;
    for (size_t i = 0; i < row.size(); ++i) {
        if (i) os << sep;
        os << row[i];
    }
    return os.str();
}

}  // namespace

std::string format_modulus(const FieldCtx& F) {
    std::ostringstream os;
    os << "poly:[";
    const auto& mod = F.modulus();
    for (size_t i = 0; i < mod.size(); ++i) {
        if (i) os << ',';
        os << mod[i];
    }
    os << ']';
    return os.str();
}

std::string format_grid_text(const FieldCtx& F, const Torus& torus) {
    std::ostringstream os;
    os << F.p() << ' ' << F.n() << ' ' << torus.s << ' ' << torus.t << ' '
       << F.format_element(torus.lambda) << ' ' << format_modulus(F) << '\n';
    for (const auto& row : torus.values) os << join_row(row, ' ') << '\n';
    return os.str();
}

std::string format_grid_csv(const Torus& torus) {
    std::ostringstream os;
    for (const auto& row : torus.values) os << join_row(row, ',') << '\n';
    return os.str();
}

std::string format_grid_pbm(const FieldCtx& F, const Torus& torus) {
    if (F.p() != 2) throw error(errc::odd_characteristic, "PBM export requires p = 2");
    std::ostringstream os;
    os << "P1\n" << torus.t << ' ' << torus.s << '\n';
    for (const auto& row : torus.values) os << join_row(row, ' ') << '\n';
    return os.str();
}

ordered_json torus_to_json(const FieldCtx& F, const Torus& torus, const ColumnReport* report) {
    ordered_json j;
    j["field"] = {{"p", F.p()}, {"n", F.n()}, {"modulus", F.modulus()}};
    j["s"] = torus.s;
    j["t"] = torus.t;
    j["lambda"] = torus.lambda.c;
    j["values"] = torus.values;
    if (report) j["column_report"] = column_report_to_json(F, *report);
    return j;
}

std::pair<FieldCtx, Torus> torus_from_json(const ordered_json& j) {
    int p = j.at("field").at("p").get<int>();
    int n = j.at("field").at("n").get<int>();
    std::vector<int> modulus = j.at("field").at("modulus").get<std::vector<int>>();
    FieldCtx F = FieldCtx::make(p, n, modulus);
    Element lambda = F.from_coeffs(j.at("lambda").get<std::vector<int>>());
    Torus torus = build_torus(F, j.at("s").get<int>(), j.at("t").get<int>(), lambda);
    auto values = j.at("values").get<std::vector<std::vector<int>>>();
    if (values != torus.values) throw error(errc::bad_factorization, "stored values do not match the rebuilt torus");
    return {std::move(F), std::move(torus)};
}

std::string format_rows_text(const std::vector<std::vector<int>>& rows) {
    std::ostringstream os;
    for (const auto& row : rows) os << join_row(row, ' ') << '\n';
    return os.str();
}

std::string format_sequence(const FieldCtx& F, const DBSequence& seq,
                            const std::vector<Element>& symbols) {
    std::ostringstream os;
    os << F.p() << ' ' << F.n() << ' ' << seq.m << ' ' << F.format_element(seq.lambda) << ' ';
    for (size_t k = 0; k < seq.feedback.size(); ++k) {
        if (k) os << ',';
        if (seq.m == 1)
            os << seq.feedback[k].c[0];
        else
            os << F.format_element(seq.feedback[k]);
    }
    os << '\n';
    for (size_t i = 0; i < symbols.size(); ++i) {
        if (i) os << ' ';
        if (seq.m == 1)
            os << symbols[i].c[0];
        else
            os << F.format_element(symbols[i]);
    }
    os << '\n';
    return os.str();
}

std::string format_pattern(const Pattern& pat) {
    std::ostringstream os;
    for (auto [i, j] : pat.offsets) os << i << ' ' << j << '\n';
    return os.str();
}

Pattern parse_pattern_text(const std::string& text) {
    std::vector<std::pair<int, int>> offsets;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        int i, j;
        if (ls >> i >> j) offsets.emplace_back(i, j);
    }
    return make_pattern(std::move(offsets));
}

std::vector<std::vector<int>> parse_nd_pattern_text(const std::string& text) {
    std::vector<std::vector<int>> offsets;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<int> o;
        int v;
        while (ls >> v) o.push_back(v);
        if (!o.empty()) offsets.push_back(std::move(o));
    }
    return offsets;
}

ordered_json certificate_to_json(const SamplingCertificate& cert) {
    ordered_json j;
    ordered_json offs = ordered_json::array();
    for (auto [i, k] : cert.pattern.offsets) offs.push_back({i, k});
    j["offsets"] = offs;
    auto matrix_rows = [](const GfpMatrix& m) {
        ordered_json rows = ordered_json::array();
        for (int r = 0; r < m.rows; ++r) {
            ordered_json row = ordered_json::array();
            for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
            rows.push_back(row);
        }
        return rows;
    };
    j["phi"] = matrix_rows(cert.phi);
    j["phi_inverse"] = matrix_rows(cert.phi_inverse);
    return j;
}

std::string format_ntorus_text(const FieldCtx& F, const NTorus& nt) {
    std::ostringstream os;
    os << F.p() << ' ' << F.n() << ' ' << F.format_element(nt.lambda);
    for (int d : nt.dims) os << ' ' << d;
    os << '\n' << join_row(nt.values, ' ') << '\n';
    return os.str();
}

ordered_json ntorus_to_json(const FieldCtx& F, const NTorus& nt) {
    ordered_json j;
    j["field"] = {{"p", F.p()}, {"n", F.n()}, {"modulus", F.modulus()}};
    j["dims"] = nt.dims;
    j["lambda"] = nt.lambda.c;
    j["values"] = nt.values;
    return j;
}

ordered_json column_report_to_json(const FieldCtx& F, const ColumnReport& report) {
    ordered_json j;
    ordered_json cols = ordered_json::array();
    for (const auto& c : report.columns) {
        if (c.zero)
            cols.push_back("zero");
        else
            cols.push_back("shift:" + std::to_string(c.shift));
    }
    j["columns"] = cols;
    ordered_json counts = ordered_json::object();
    for (auto [r, k] : report.counts) counts[std::to_string(r)] = k;
    j["counts"] = counts;
    j["zero_columns"] = report.zero_columns;
    ordered_json factors = ordered_json::array();
    for (const auto& f : report.factors) {
        ordered_json fj;
        fj["degree"] = f.degree();
        ordered_json coeffs = ordered_json::array();
        for (const auto& c : f.coeffs) coeffs.push_back(F.format_element_pow(c));
        fj["coeffs"] = coeffs;
        fj["second_leading"] = F.format_element_pow(f.second_leading());
        factors.push_back(fj);
    }
    j["factors"] = factors;
    return j;
}

}  // namespace dbt
