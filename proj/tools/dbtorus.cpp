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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dbt/dbseq.hpp"
#include "dbt/io.hpp"
#include "dbt/ntorus.hpp"
#include "dbt/pattern.hpp"
#include "dbt/torus.hpp"

namespace {

using namespace dbt;

uint64_t table_cap() {
    if (const char* v = std::getenv("TORUS_TABLE_CAP")) return std::stoull(v);
    return FieldCtx::kDefaultTableCap;
}

std::vector<int> parse_int_list(const std::string& s, char sep = ',') {
    std::vector<int> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, sep))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

struct Opts {
    int p = 2;
    int n = 1;
    std::string modulus;
    int s = 1;
    int t = 1;
    int m = 1;
    std::string lambda = "1";
    std::string pattern;
    std::string pattern_file;
    std::string pattern2;
    std::string pattern2_file;
    std::string shift = "0,0";
    std::string values;
    std::string dims;
    std::string format = "text";
    std::string output;
    bool new_cells_only = false;
    bool full = false;
};

FieldCtx make_field(const Opts& o) {
    std::optional<std::vector<int>> mod;
    if (!o.modulus.empty()) mod = parse_int_list(o.modulus);
    return FieldCtx::make(o.p, o.n, std::move(mod), table_cap());
}

Pattern resolve_pattern(const FieldCtx& F, const std::string& inline_spec,
                        const std::string& file) {
    if (!inline_spec.empty()) {
        if (inline_spec.rfind("kronecker:", 0) == 0)
            return kronecker_pattern(F, std::stoi(inline_spec.substr(10)));
        // inline offsets: "i,j;i,j;..."
        std::vector<std::pair<int, int>> offsets;
        std::istringstream is(inline_spec);
        std::string cell;
        while (std::getline(is, cell, ';')) {
            std::vector<int> ij = parse_int_list(cell);
            if (ij.size() != 2) throw CLI::ValidationError("--pattern", "cells must be i,j pairs");
            offsets.emplace_back(ij[0], ij[1]);
        }
        return make_pattern(std::move(offsets));
    }
    if (file.empty()) throw CLI::ValidationError("--pattern", "a pattern is required");
    std::ifstream in(file);
    if (!in) throw CLI::ValidationError("--pattern-file", "cannot open " + file);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_pattern_text(buf.str());
}

void emit(const Opts& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output, std::ios::binary);
    if (!out) throw CLI::ValidationError("--output", "cannot open " + o.output);
    out << text;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string csv_rows(const std::vector<std::vector<int>>& rows) {
    std::ostringstream os;
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << '\n';
    }
    return os.str();
}

std::string pbm_rows(int p, const std::vector<std::vector<int>>& rows) {
    if (p != 2) throw error(errc::odd_characteristic, "PBM export requires p = 2");
    std::ostringstream os;
    os << "P1\n" << (rows.empty() ? 0 : rows[0].size()) << ' ' << rows.size() << '\n';
    return os.str() + format_rows_text(rows);
}

void cmd_field_find(const Opts& o) {
    FieldCtx F = make_field(o);
    if (o.format == "json")
        emit(o, dump({{"p", F.p()}, {"n", F.n()}, {"modulus", F.modulus()}}));
    else
        emit(o, format_modulus(F) + "\n");
}

void cmd_field_describe(const Opts& o) {
    FieldCtx F = make_field(o);
    if (o.format == "json") {
        emit(o, dump({{"p", F.p()},
                      {"n", F.n()},
                      {"size", F.size()},
                      {"order", F.order()},
                      {"modulus", F.modulus()},
                      {"tables", F.has_tables()}}));
        return;
    }
    std::ostringstream os;
    os << "p " << F.p() << "\nn " << F.n() << "\nsize " << F.size() << "\norder " << F.order()
       << "\nmodulus " << format_modulus(F) << "\ntables " << (F.has_tables() ? "yes" : "no")
       << "\n";
    emit(o, os.str());
}

void cmd_seq(const Opts& o, bool lift, bool strip) {
    FieldCtx F = make_field(o);
    DBSequence seq = db_sequence(F, o.m, F.parse_element(o.lambda));
    std::vector<Element> symbols = seq.symbols;
    if (lift || o.full) symbols = lift_to_full(F, symbols, seq.window);
    if (strip) {
        emit(o, format_rows_text(to_strip(F, symbols, o.m).cells));
        return;
    }
    emit(o, format_sequence(F, seq, symbols));
}

void cmd_torus_generate(const Opts& o) {
    FieldCtx F = make_field(o);
    Torus torus = build_torus(F, o.s, o.t, F.parse_element(o.lambda));
    if (o.format == "json")
        emit(o, dump(torus_to_json(F, torus)));
    else if (o.format == "pbm")
        emit(o, format_grid_pbm(F, torus));
    else if (o.format == "csv")
        emit(o, format_grid_csv(torus));
    else
        emit(o, format_grid_text(F, torus));
}

void cmd_torus_classify(const Opts& o) {
    FieldCtx F = make_field(o);
    Torus torus = build_torus(F, o.s, o.t, F.parse_element(o.lambda));
    ColumnReport report = classify_columns(F, torus, o.m);
    if (o.format == "json") {
        emit(o, dump(column_report_to_json(F, report)));
        return;
    }
    std::ostringstream os;
    for (size_t j = 0; j < report.columns.size(); ++j)
        os << j << ' '
           << (report.columns[j].zero ? "zero" : "shift:" + std::to_string(report.columns[j].shift))
           << '\n';
    os << "zero_columns " << report.zero_columns << '\n';
    for (auto [r, k] : report.counts) os << "count " << r << ' ' << k << '\n';
    emit(o, os.str());
}

void cmd_torus_extend(const Opts& o) {
    FieldCtx F = make_field(o);
    Torus torus = build_torus(F, o.s, o.t, F.parse_element(o.lambda));
    ExtendedGrid grid = extend_array(torus, resolve_pattern(F, o.pattern, o.pattern_file));
    if (o.format == "csv")
        emit(o, csv_rows(grid.values));
    else if (o.format == "pbm")
        emit(o, pbm_rows(F.p(), grid.values));
    else
        emit(o, format_rows_text(grid.values));
}

void cmd_pattern_check(const Opts& o) {
    FieldCtx F = make_field(o);
    Torus torus = build_torus(F, o.s, o.t, F.parse_element(o.lambda));
    Pattern pat = resolve_pattern(F, o.pattern, o.pattern_file);
    bool indep = is_independent(F, torus, pat);
    bool basis = is_basis(F, torus, pat);
    std::string sampling = "n/a";
    if (static_cast<int>(pat.offsets.size()) == F.n())
        sampling = verify_sampling(F, torus, pat) ? "yes" : "no";
    std::ostringstream os;
    os << "independent " << (indep ? "yes" : "no") << "\nbasis " << (basis ? "yes" : "no")
       << "\nsampling " << sampling << "\n";
    emit(o, os.str());
}

void cmd_pattern_kronecker(const Opts& o) {
    FieldCtx F = make_field(o);
    emit(o, format_pattern(kronecker_pattern(F, o.m)));
}

void cmd_pattern_extend(const Opts& o) {
    FieldCtx F = make_field(o);
    Torus torus = build_torus(F, o.s, o.t, F.parse_element(o.lambda));
    Pattern s1 = resolve_pattern(F, o.pattern, o.pattern_file);
    Pattern s2 = (o.pattern2.empty() && o.pattern2_file.empty())
                     ? s1
                     : resolve_pattern(F, o.pattern2, o.pattern2_file);
    TranslateOffset shift = find_extension_shift(F, torus, s1, s2);
    emit(o, std::to_string(shift.a) + " " + std::to_string(shift.b) + "\n");
}

void cmd_pattern_build(const Opts& o) {
    FieldCtx F = make_field(o);
    Torus torus = build_torus(F, o.s, o.t, F.parse_element(o.lambda));
    emit(o, format_pattern(recursive_build(F, torus, resolve_pattern(F, o.pattern, o.pattern_file))));
}

void cmd_update_matrix(const Opts& o) {
    FieldCtx F = make_field(o);
    Torus torus = build_torus(F, o.s, o.t, F.parse_element(o.lambda));
    Pattern s_in = resolve_pattern(F, o.pattern, o.pattern_file);
    std::vector<int> sh = parse_int_list(o.shift);
    if (sh.size() != 2) throw CLI::ValidationError("--shift", "expected di,dj");
    std::optional<Pattern> s_out;
    if (o.new_cells_only) s_out = new_cells(s_in, {sh[0], sh[1]}, o.s, o.t);
    UpdateMatrix um = update_matrix(F, torus, s_in, {sh[0], sh[1]}, s_out);
    if (o.format == "json") {
        ordered_json j;
        j["shift"] = {um.shift.first, um.shift.second};
        j["coeffs"] = um.coeffs;
        j["carry_map"] = um.carry_map;
        emit(o, dump(j));
        return;
    }
    emit(o, format_rows_text(um.coeffs));
}

void cmd_decode(const Opts& o) {
    FieldCtx F = make_field(o);
    Torus torus = build_torus(F, o.s, o.t, F.parse_element(o.lambda));
    SamplingCertificate cert =
        make_certificate(F, torus, resolve_pattern(F, o.pattern, o.pattern_file));
    TranslateOffset at = decode(F, torus, cert, parse_int_list(o.values));
    if (o.format == "json") {
        emit(o, dump({{"a", at.a}, {"b", at.b}}));
        return;
    }
    emit(o, std::to_string(at.a) + " " + std::to_string(at.b) + "\n");
}

void cmd_ntorus_generate(const Opts& o) {
    FieldCtx F = make_field(o);
    NTorus nt = build_ntorus(F, parse_int_list(o.dims), F.parse_element(o.lambda));
    if (o.format == "json")
        emit(o, dump(ntorus_to_json(F, nt)));
    else
        emit(o, format_ntorus_text(F, nt));
}

void cmd_ntorus_check(const Opts& o) {
    FieldCtx F = make_field(o);
    NTorus nt = build_ntorus(F, parse_int_list(o.dims), F.parse_element(o.lambda));
    std::ifstream in(o.pattern_file);
    if (!in) throw CLI::ValidationError("--pattern-file", "cannot open " + o.pattern_file);
    std::stringstream buf;
    buf << in.rdbuf();
    bool ok = verify_sampling_nd(F, nt, parse_nd_pattern_text(buf.str()));
    emit(o, std::string("sampling ") + (ok ? "yes" : "no") + "\n");
}

void add_field_opts(CLI::App* cmd, Opts& o) {
    cmd->add_option("-p", o.p, "prime characteristic")->required();
    cmd->add_option("-n", o.n, "extension degree")->required();
    cmd->add_option("--modulus", o.modulus, "modulus coefficients, low degree first (c0,c1,...)");
}

void add_output_opts(CLI::App* cmd, Opts& o) {
    cmd->add_option("--format", o.format, "output format")->default_val("text");
    cmd->add_option("-o,--output", o.output, "output file (default stdout)");
}

void add_torus_opts(CLI::App* cmd, Opts& o) {
    cmd->add_option("-s", o.s, "row count")->required();
    cmd->add_option("-t", o.t, "column count")->required();
    cmd->add_option("--lambda", o.lambda, "linear form coefficient")->default_val("1");
}

void add_pattern_opts(CLI::App* cmd, Opts& o) {
    cmd->add_option("--pattern", o.pattern, "kronecker:M or inline i,j;i,j;...");
    cmd->add_option("--pattern-file", o.pattern_file, "pattern file path");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"trace-based De Bruijn sequences, tori, and sampling patterns"};
    app.require_subcommand(1);
    Opts o;

    CLI::App* field = app.add_subcommand("field", "finite field setup");
    field->require_subcommand(1);
    CLI::App* ffind = field->add_subcommand("find", "smallest primitive modulus");
    CLI::App* fdesc = field->add_subcommand("describe", "field parameters");
    for (CLI::App* c : {ffind, fdesc}) {
        add_field_opts(c, o);
        add_output_opts(c, o);
    }
    ffind->callback([&] { cmd_field_find(o); });
    fdesc->callback([&] { cmd_field_describe(o); });

    CLI::App* seq = app.add_subcommand("seq", "trace De Bruijn sequences");
    seq->require_subcommand(1);
    CLI::App* sgen = seq->add_subcommand("generate", "punctured sequence");
    CLI::App* slift = seq->add_subcommand("lift", "full sequence via zero insertion");
    CLI::App* sstrip = seq->add_subcommand("strip", "coordinate strip");
    for (CLI::App* c : {sgen, slift, sstrip}) {
        add_field_opts(c, o);
        add_output_opts(c, o);
        c->add_option("-m", o.m, "symbol alphabet GF(p^m)")->default_val(1);
        c->add_option("--lambda", o.lambda, "linear form coefficient")->default_val("1");
    }
    sstrip->add_flag("--full", o.full, "lift before expanding");
    sgen->callback([&] { cmd_seq(o, false, false); });
    slift->callback([&] { cmd_seq(o, true, false); });
    sstrip->callback([&] { cmd_seq(o, false, true); });

    CLI::App* torus = app.add_subcommand("torus", "2-D tori");
    torus->require_subcommand(1);
    CLI::App* tgen = torus->add_subcommand("generate", "value grid");
    CLI::App* tcls = torus->add_subcommand("classify", "column structure");
    CLI::App* text = torus->add_subcommand("extend", "non-toroidal replication");
    for (CLI::App* c : {tgen, tcls, text}) {
        add_field_opts(c, o);
        add_torus_opts(c, o);
        add_output_opts(c, o);
    }
    tcls->add_option("-m", o.m, "subfield degree (s = p^m - 1)")->required();
    add_pattern_opts(text, o);
    tgen->callback([&] { cmd_torus_generate(o); });
    tcls->callback([&] { cmd_torus_classify(o); });
    text->callback([&] { cmd_torus_extend(o); });

    CLI::App* pattern = app.add_subcommand("pattern", "sampling patterns");
    pattern->require_subcommand(1);
    CLI::App* pchk = pattern->add_subcommand("check", "independence and sampling");
    CLI::App* pkro = pattern->add_subcommand("kronecker", "rectangular basis pattern");
    CLI::App* pext = pattern->add_subcommand("extend", "disjoint independent shift");
    CLI::App* pbld = pattern->add_subcommand("build", "recursive basis construction");
    for (CLI::App* c : {pchk, pext, pbld}) {
        add_field_opts(c, o);
        add_torus_opts(c, o);
        add_pattern_opts(c, o);
        add_output_opts(c, o);
    }
    add_field_opts(pkro, o);
    add_output_opts(pkro, o);
    pkro->add_option("-m", o.m, "subfield degree")->required();
    pext->add_option("--pattern2", o.pattern2, "second shape (defaults to the first)");
    pext->add_option("--pattern2-file", o.pattern2_file, "second shape file");
    pchk->callback([&] { cmd_pattern_check(o); });
    pkro->callback([&] { cmd_pattern_kronecker(o); });
    pext->callback([&] { cmd_pattern_extend(o); });
    pbld->callback([&] { cmd_pattern_build(o); });

    CLI::App* update = app.add_subcommand("update", "recursive update rules");
    update->require_subcommand(1);
    CLI::App* umat = update->add_subcommand("matrix", "linear rule for a shift");
    add_field_opts(umat, o);
    add_torus_opts(umat, o);
    add_pattern_opts(umat, o);
    add_output_opts(umat, o);
    umat->add_option("--shift", o.shift, "di,dj")->required();
    umat->add_flag("--new-cells", o.new_cells_only, "rows for newly exposed cells only");
    umat->callback([&] { cmd_update_matrix(o); });

    CLI::App* dec = app.add_subcommand("decode", "position from a value pattern");
    add_field_opts(dec, o);
    add_torus_opts(dec, o);
    add_pattern_opts(dec, o);
    add_output_opts(dec, o);
    dec->add_option("--values", o.values, "observed GF(p) digits v0,v1,...")->required();
    dec->callback([&] { cmd_decode(o); });

    CLI::App* ntor = app.add_subcommand("ntorus", "N-dimensional tori");
    ntor->require_subcommand(1);
    CLI::App* ngen = ntor->add_subcommand("generate", "value tensor");
    CLI::App* nchk = ntor->add_subcommand("check", "N-dimensional sampling");
    for (CLI::App* c : {ngen, nchk}) {
        add_field_opts(c, o);
        add_output_opts(c, o);
        c->add_option("--dims", o.dims, "axis lengths d1,d2,...")->required();
        c->add_option("--lambda", o.lambda, "linear form coefficient")->default_val("1");
    }
    nchk->add_option("--pattern-file", o.pattern_file, "offset file, one row per cell")->required();
    ngen->callback([&] { cmd_ntorus_generate(o); });
    nchk->callback([&] { cmd_ntorus_check(o); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const dbt::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 70;
    }
    return 0;
}
