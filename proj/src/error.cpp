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

#include "dbt/error.hpp"

namespace dbt {

const char* errc_name(errc k) {
    switch (k) {
        case errc::non_prime_p: return "NonPrimeP";
        case errc::not_irreducible: return "NotIrreducible";
        case errc::not_primitive: return "NotPrimitive";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::log_of_zero: return "LogOfZero";
        case errc::not_a_divisor: return "NotADivisor";
        case errc::not_in_subfield: return "NotInSubfield";
        case errc::zero_form: return "ZeroForm";
        case errc::not_proper_tower: return "NotProperTower";
        case errc::all_zero_seed: return "AllZeroSeed";
        case errc::no_zero_run: return "NoZeroRun";
        case errc::bad_factorization: return "BadFactorization";
        case errc::not_subfield_regime: return "NotSubfieldRegime";
        case errc::odd_characteristic: return "OddCharacteristic";
        case errc::out_of_bounds: return "OutOfBounds";
        case errc::wrong_size: return "WrongSize";
        case errc::no_valid_shift: return "NoValidShift";
        case errc::dimension_exceeded: return "DimensionExceeded";
        case errc::not_a_basis: return "NotABasis";
        case errc::all_zero_pattern: return "AllZeroPattern";
        case errc::not_coprime: return "NotCoprime";
        case errc::bad_product: return "BadProduct";
    }
    return "UnknownError";
}

}  // namespace dbt
