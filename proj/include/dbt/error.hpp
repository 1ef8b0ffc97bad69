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

#ifndef DBT_ERROR_HPP
#define DBT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dbt {

/// Violated mathematical preconditions. The name of the kind appears in the
/// exception message so callers (and the CLI) can report which one failed.
enum class errc {
    non_prime_p,
    not_irreducible,
    not_primitive,
    division_by_zero,
    log_of_zero,
    not_a_divisor,
    not_in_subfield,
    zero_form,
    not_proper_tower,
    all_zero_seed,
    no_zero_run,
    bad_factorization,
    not_subfield_regime,
    odd_characteristic,
    out_of_bounds,
    wrong_size,
    no_valid_shift,
    dimension_exceeded,
    not_a_basis,
    all_zero_pattern,
    not_coprime,
    bad_product,
};

const char* errc_name(errc k);

class error : public std::runtime_error {
  public:
    error(errc k, const std::string& detail)
        : std::runtime_error(std::string(errc_name(k)) + ": " + detail), kind_(k) {}
    errc kind() const { return kind_; }

  private:
    errc kind_;
};

}  // namespace dbt

#endif
