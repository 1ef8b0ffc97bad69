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

#ifndef DBT_GF_HPP
#define DBT_GF_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dbt/error.hpp"

namespace dbt {

/// Element of GF(p^n) in the power basis 1, alpha, ..., alpha^{n-1}.
/// Coefficients are canonical integers in [0, p), low degree first.
struct Element {
    std::vector<int> c;
    bool operator==(const Element&) const = default;
};

/// Monic polynomial over a subfield GF(p^m), coefficients low-first.
/// Coefficients are represented in the big field and satisfy c^{p^m} = c.
struct SubfieldPoly {
    int sub_degree = 1;  // m
    std::vector<Element> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    const Element& second_leading() const { return coeffs[degree() - 1]; }
};

/// A finite field GF(p^n) with a fixed primitive modulus. Immutable after
/// construction; all operations are pure and safe for concurrent use.
class FieldCtx {
  public:
    static constexpr uint64_t kDefaultTableCap = uint64_t(1) << 24;

    /// Builds the field. If no modulus is given, the lexicographically
    /// smallest primitive polynomial is selected (coefficients compared
    /// low-degree-first as base-p digits). A supplied modulus must be monic
    /// of degree n, irreducible, and primitive.
    static FieldCtx make(int p, int n, std::optional<std::vector<int>> modulus = std::nullopt,
                         uint64_t table_cap = kDefaultTableCap);

    int p() const { return p_; }
    int n() const { return n_; }
    uint64_t size() const { return q_; }
    uint64_t order() const { return order_; }
    const std::vector<int>& modulus() const { return modulus_; }
    bool has_tables() const { return has_tables_; }

    Element zero() const { return Element{std::vector<int>(n_, 0)}; }
    Element one() const { return scalar(1); }
    Element alpha() const;
    Element scalar(int v) const;
    Element from_coeffs(std::vector<int> c) const;
    Element from_pow(uint64_t k) const;  // alpha^k

    bool is_zero(const Element& a) const;

    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element mul(const Element& a, const Element& b) const;
    Element inv(const Element& a) const;
    Element pow(const Element& a, int64_t e) const;
    Element frobenius(const Element& a, int times = 1) const;  // a^{p^times}

    /// Discrete log base alpha; inverse of from_pow on nonzero elements.
    uint64_t dlog(const Element& a) const;

    /// Absolute trace tr_{GF(p^n)/GF(p)}.
    int trace_to_prime(const Element& a) const;
    /// Relative trace into GF(p^m), m | n.
    Element trace_to_subfield(int m, const Element& a) const;
    /// psi(x) = tr(lambda * x); the form must be nonzero.
    int form_value(const Element& lambda, const Element& x) const;
    /// Psi(x) = (psi(x), psi(alpha x), ..., psi(alpha^{n-1} x)).
    std::vector<int> coord_map(const Element& lambda, const Element& x) const;

    /// Canonical generator of the subfield GF(p^m): alpha^{(p^n-1)/(p^m-1)}.
    Element subfield_generator(int m) const;
    bool in_subfield(int m, const Element& a) const;
    /// Coordinates of a subfield element in the power basis of the canonical
    /// subfield generator.
    std::vector<int> subfield_coords(int m, const Element& a) const;
    /// tr_{GF(p^m)/GF(p)} of an element of the subfield.
    int subfield_trace_to_prime(int m, const Element& a) const;

    /// Minimal polynomial of a over GF(p^m): product of x - a^{p^{mi}} over
    /// the Frobenius orbit.
    SubfieldPoly minimal_poly(int m, const Element& a) const;

    /// Factors x^t - 1 over GF(p^m) into orbit minimal polynomials, one per
    /// cyclotomic coset of multiplication by p^m mod t. Requires t | p^n - 1.
    std::vector<SubfieldPoly> factor_unity(int m, uint64_t t) const;

    Element eval_poly(const SubfieldPoly& f, const Element& x) const;

    uint64_t pack(const Element& a) const;
    Element unpack(uint64_t v) const;

    /// Canonical element syntax "poly:[c0,c1,...]".
    std::string format_element(const Element& a) const;
    /// Compact syntax: "0" for zero, "pow:k" otherwise.
    std::string format_element_pow(const Element& a) const;
    /// Accepts "poly:[...]", "pow:k", or a bare integer (packed base-p digits).
    Element parse_element(const std::string& s) const;

  private:
    FieldCtx() = default;

    int p_ = 2;
    int n_ = 1;
    uint64_t q_ = 2;
    uint64_t order_ = 1;
    std::vector<int> modulus_;  // n+1 coefficients, monic
    bool has_tables_ = false;
    std::vector<uint32_t> exp_;  // exp_[k] = pack(alpha^k)
    std::vector<uint32_t> log_;  // packed value -> exponent, sentinel for 0

    std::vector<int> mul_raw(const std::vector<int>& a, const std::vector<int>& b) const;
    void require_divisor(int m) const;
};

/// Distinct prime factors, ascending (trial division).
std::vector<uint64_t> prime_factors(uint64_t v);

bool is_prime_u64(uint64_t v);

}  // namespace dbt

#endif
