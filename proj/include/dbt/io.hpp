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

#ifndef DBT_IO_HPP
#define DBT_IO_HPP

#include <string>
#include <utility>

#include "dbt/dbseq.hpp"
#include "dbt/ntorus.hpp"
#include "dbt/pattern.hpp"
#include "dbt/torus.hpp"

#include "json.hpp"

namespace dbt {

using ordered_json = nlohmann::ordered_json;

std::string format_modulus(const FieldCtx& F);

/// Grid text format: header "p n s t lambda modulus", then s rows of t
/// space-separated GF(p) digits.
std::string format_grid_text(const FieldCtx& F, const Torus& torus);
std::string format_grid_csv(const Torus& torus);
/// PBM (P1), p = 2 only, row-major.
std::string format_grid_pbm(const FieldCtx& F, const Torus& torus);
ordered_json torus_to_json(const FieldCtx& F, const Torus& torus, const ColumnReport* report = nullptr);
/// Rebuilds field and torus from the JSON export; verifies stored values.
std::pair<FieldCtx, Torus> torus_from_json(const ordered_json& j);

std::string format_rows_text(const std::vector<std::vector<int>>& rows);

/// Sequence file: header "p n m lambda feedback", then one symbol per token.
/// GF(p) symbols print as bare digits; subfield symbols in element syntax.
std::string format_sequence(const FieldCtx& F, const DBSequence& seq,
                            const std::vector<Element>& symbols);

/// Pattern files: lines of "i j" offsets, '#' comments.
std::string format_pattern(const Pattern& pat);
Pattern parse_pattern_text(const std::string& text);
std::vector<std::vector<int>> parse_nd_pattern_text(const std::string& text);

ordered_json certificate_to_json(const SamplingCertificate& cert);

std::string format_ntorus_text(const FieldCtx& F, const NTorus& nt);
ordered_json ntorus_to_json(const FieldCtx& F, const NTorus& nt);

ordered_json column_report_to_json(const FieldCtx& F, const ColumnReport& report);

}  // namespace dbt

#endif
