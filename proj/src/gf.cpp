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

#include "dbt/gf.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "dbt/linalg.hpp"

namespace dbt {

namespace {

constexpr uint32_t kLogSentinel = std::numeric_limits<uint32_t>::max();

int smod(int p, long long v) { return static_cast<int>(((v % p) + p) % p); }

// Dense polynomial over GF(p), low degree first. May carry trailing zeros.
using Poly = std::vector<int>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly pmul(int p, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = smod(p, out[i + j] + 1LL * a[i] * b[j]);
    }
    return out;
}

// Remainder of a modulo f; f need not be monic.
Poly pmod(int p, Poly a, Poly f) {
    trim(a);
    trim(f);
    assert(!f.empty());
    int df = static_cast<int>(f.size()) - 1;
    int linv = gfp_inv_scalar(p, f.back());
    while (static_cast<int>(a.size()) - 1 >= df && !a.empty()) {
        int da = static_cast<int>(a.size()) - 1;
        int factor = smod(p, 1LL * a.back() * linv);
        if (factor != 0)
            for (int i = 0; i <= df; ++i)
                a[da - df + i] = smod(p, a[da - df + i] - 1LL * factor * f[i]);
        a.pop_back();
        trim(a);
    }
    return a;
}

Poly pgcd(int p, Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = pmod(p, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        int linv = gfp_inv_scalar(p, a.back());
        for (int& c : a) c = smod(p, 1LL * c * linv);
    }
    return a;
}

Poly ppowmod(int p, Poly base, uint64_t e, const Poly& f) {
    Poly acc = {1};
    base = pmod(p, std::move(base), f);
    while (e > 0) {
        if (e & 1) acc = pmod(p, pmul(p, acc, base), f);
        base = pmod(p, pmul(p, base, base), f);
        e >>= 1;
    }
    return acc;
}

bool poly_is_one(const Poly& a) { return a.size() == 1 && a[0] == 1; }

uint64_t ipow_checked(int p, int n) {
    uint64_t q = 1;
    for (int i = 0; i < n; ++i) {
        if (q > std::numeric_limits<uint64_t>::max() / static_cast<uint64_t>(p))
            throw error(errc::bad_product, "field size overflows 64 bits");
        q *= static_cast<uint64_t>(p);
    }
    return q;
}

bool is_irreducible(int p, const Poly& f) {
    int n = static_cast<int>(f.size()) - 1;
    if (n <= 0) return false;
    if (n == 1) return true;
    // x^{p^n} == x mod f, and gcd(x^{p^{n/r}} - x, f) trivial for prime r | n.
    Poly x = {0, 1};
    uint64_t pn = ipow_checked(p, n);
    Poly xq = ppowmod(p, x, pn, f);
    Poly diff = xq;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = smod(p, diff[1] - 1);
    trim(diff);
    if (!diff.empty()) return false;
    for (uint64_t r : prime_factors(static_cast<uint64_t>(n))) {
        uint64_t pk = ipow_checked(p, static_cast<int>(n / r));
        Poly g = ppowmod(p, x, pk, f);
        g.resize(std::max<size_t>(g.size(), 2), 0);
        g[1] = smod(p, g[1] - 1);
        trim(g);
        Poly gc = pgcd(p, g, f);
        if (!(gc.empty() || poly_is_one(gc))) return false;
    }
    return true;
}

// Order test for the residue class of x modulo a monic degree-n polynomial.
bool is_primitive(int p, const Poly& f, uint64_t order) {
    if (f[0] == 0) return false;  // x divides f
    Poly x = {0, 1};
    if (!poly_is_one(ppowmod(p, x, order, f))) return false;
    for (uint64_t r : prime_factors(order))
        if (poly_is_one(ppowmod(p, x, order / r, f))) return false;
    return true;
}

}  // namespace

bool is_prime_u64(uint64_t v) {
    if (v < 2) return false;
    for (uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t v) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

FieldCtx FieldCtx::make(int p, int n, std::optional<std::vector<int>> modulus, uint64_t table_cap) {
    if (!is_prime_u64(static_cast<uint64_t>(p)))
        throw error(errc::non_prime_p, "p = " + std::to_string(p));
    if (n < 1) throw error(errc::bad_product, "n must be >= 1");

    FieldCtx F;
    F.p_ = p;
    F.n_ = n;
    F.q_ = ipow_checked(p, n);
    F.order_ = F.q_ - 1;

    if (modulus) {
        Poly f = *modulus;
        for (int& c : f) c = smod(p, c);
        if (static_cast<int>(f.size()) != n + 1 || f.back() != 1)
            throw error(errc::not_irreducible, "modulus must be monic of degree n");
        if (!is_irreducible(p, f)) throw error(errc::not_irreducible, "supplied modulus is reducible");
        if (F.order_ > 0 && !is_primitive(p, f, F.order_))
            throw error(errc::not_primitive, "root of supplied modulus does not generate the multiplicative group");
        F.modulus_ = f;
    } else {
        // Lexicographically smallest primitive polynomial: low coefficients
        // enumerated as base-p digits.
        bool found = false;
        for (uint64_t v = 0; v < F.q_ && !found; ++v) {
            Poly f(n + 1, 0);
            uint64_t w = v;
            for (int i = 0; i < n; ++i) {
                f[i] = static_cast<int>(w % p);
                w /= p;
            }
            f[n] = 1;
            if (f[0] == 0) continue;
            if (!is_irreducible(p, f)) continue;
            if (!is_primitive(p, f, F.order_)) continue;
            F.modulus_ = f;
            found = true;
        }
        if (!found) throw error(errc::not_primitive, "no primitive polynomial found");  // unreachable
    }

    if (F.q_ <= table_cap) {
        F.exp_.resize(F.order_);
        F.log_.assign(F.q_, kLogSentinel);
        std::vector<int> e(n, 0);
        e[0] = 1;  // alpha^0
        for (uint64_t k = 0; k < F.order_; ++k) {
            uint64_t packed = 0;
            for (int i = n - 1; i >= 0; --i) packed = packed * p + static_cast<uint64_t>(e[i]);
            F.exp_[k] = static_cast<uint32_t>(packed);
            F.log_[packed] = static_cast<uint32_t>(k);
            // multiply by alpha: shift up and reduce by the monic modulus
            int top = e[n - 1];
            for (int i = n - 1; i > 0; --i) e[i] = e[i - 1];
            e[0] = 0;
            if (top != 0)
                for (int i = 0; i < n; ++i) e[i] = smod(p, e[i] - 1LL * top * F.modulus_[i]);
        }
        F.has_tables_ = true;
    }
    return F;
}

Element FieldCtx::alpha() const {
    std::vector<int> c(n_, 0);
    if (n_ == 1) {
        // alpha is the residue of x: -c0 in the prime field
        c[0] = smod(p_, -modulus_[0]);
    } else {
        c[1] = 1;
    }
    return Element{c};
}

Element FieldCtx::scalar(int v) const {
    std::vector<int> c(n_, 0);
    c[0] = smod(p_, v);
    return Element{c};
}

Element FieldCtx::from_coeffs(std::vector<int> c) const {
    if (static_cast<int>(c.size()) > n_) throw error(errc::out_of_bounds, "too many coefficients");
    c.resize(n_, 0);
    for (int& v : c) v = smod(p_, v);
    return Element{std::move(c)};
}

Element FieldCtx::from_pow(uint64_t k) const {
    k %= order_ == 0 ? 1 : order_;
    if (has_tables_) return unpack(exp_[k]);
    return pow(alpha(), static_cast<int64_t>(k));
}

bool FieldCtx::is_zero(const Element& a) const {
    for (int v : a.c)
        if (v != 0) return false;
    return true;
}

Element FieldCtx::add(const Element& a, const Element& b) const {
    Element out = a;
    for (int i = 0; i < n_; ++i) out.c[i] = smod(p_, out.c[i] + b.c[i]);
    return out;
}

Element FieldCtx::sub(const Element& a, const Element& b) const {
    Element out = a;
    for (int i = 0; i < n_; ++i) out.c[i] = smod(p_, out.c[i] - b.c[i]);
    return out;
}

Element FieldCtx::neg(const Element& a) const {
    Element out = a;
    for (int i = 0; i < n_; ++i) out.c[i] = smod(p_, -out.c[i]);
    return out;
}

std::vector<int> FieldCtx::mul_raw(const std::vector<int>& a, const std::vector<int>& b) const {
    Poly r = pmod(p_, pmul(p_, a, b), modulus_);
    r.resize(n_, 0);
    return r;
}

Element FieldCtx::mul(const Element& a, const Element& b) const {
    if (has_tables_) {
        if (is_zero(a) || is_zero(b)) return zero();
        uint64_t k = (static_cast<uint64_t>(log_[pack(a)]) + log_[pack(b)]) % order_;
        return unpack(exp_[k]);
    }
    return Element{mul_raw(a.c, b.c)};
}

Element FieldCtx::inv(const Element& a) const {
    if (is_zero(a)) throw error(errc::division_by_zero, "inverse of zero");
    if (has_tables_) {
        uint64_t k = (order_ - log_[pack(a)]) % order_;
        return unpack(exp_[k]);
    }
    return pow(a, static_cast<int64_t>(order_) - 1);
}

Element FieldCtx::pow(const Element& a, int64_t e) const {
    if (is_zero(a)) {
        if (e == 0) return one();
        if (e < 0) throw error(errc::division_by_zero, "negative power of zero");
        return zero();
    }
    uint64_t m = order_ == 0 ? 1 : order_;
    uint64_t ee = static_cast<uint64_t>(((e % static_cast<int64_t>(m)) + static_cast<int64_t>(m)) % static_cast<int64_t>(m));
    if (has_tables_) {
        uint64_t k = static_cast<uint64_t>(log_[pack(a)]) * ee % order_;
        return unpack(exp_[k]);
    }
    Element acc = one();
    Element base = a;
    while (ee > 0) {
        if (ee & 1) acc = Element{mul_raw(acc.c, base.c)};
        base = Element{mul_raw(base.c, base.c)};
        ee >>= 1;
    }
    return acc;
}

Element FieldCtx::frobenius(const Element& a, int times) const {
    Element out = a;
    for (int i = 0; i < times; ++i) out = pow(out, p_);
    return out;
}

uint64_t FieldCtx::dlog(const Element& a) const {
    if (is_zero(a)) throw error(errc::log_of_zero, "discrete log of zero");
    if (has_tables_) return log_[pack(a)];
    // Baby-step giant-step above the table cap.
    uint64_t m = static_cast<uint64_t>(std::ceil(std::sqrt(static_cast<double>(order_))));
    std::unordered_map<uint64_t, uint64_t> baby;
    baby.reserve(m * 2);
    Element cur = one();
    Element al = alpha();
    for (uint64_t j = 0; j < m; ++j) {
        baby.emplace(pack(cur), j);
        cur = mul(cur, al);
    }
    Element giant_step = inv(pow(al, static_cast<int64_t>(m)));  // alpha^{-m}
    Element g = a;
    for (uint64_t i = 0; i * m <= order_; ++i) {
        auto it = baby.find(pack(g));
        if (it != baby.end()) return (i * m + it->second) % order_;
        g = mul(g, giant_step);
    }
    throw error(errc::log_of_zero, "discrete log not found");  // unreachable for valid fields
}

int FieldCtx::trace_to_prime(const Element& a) const {
    Element acc = zero();
    Element cur = a;
    for (int i = 0; i < n_; ++i) {
        acc = add(acc, cur);
        if (i + 1 < n_) cur = pow(cur, p_);
    }
    for (int i = 1; i < n_; ++i) assert(acc.c[i] == 0);
    return acc.c[0];
}

void FieldCtx::require_divisor(int m) const {
    if (m < 1 || n_ % m != 0)
        throw error(errc::not_a_divisor, std::to_string(m) + " does not divide n = " + std::to_string(n_));
}

Element FieldCtx::trace_to_subfield(int m, const Element& a) const {
    require_divisor(m);
    Element acc = zero();
    Element cur = a;
    int steps = n_ / m;
    for (int i = 0; i < steps; ++i) {
        acc = add(acc, cur);
        if (i + 1 < steps) cur = frobenius(cur, m);
    }
    return acc;
}

int FieldCtx::form_value(const Element& lambda, const Element& x) const {
    if (is_zero(lambda)) throw error(errc::zero_form, "linear form is zero");
    return trace_to_prime(mul(lambda, x));
}

std::vector<int> FieldCtx::coord_map(const Element& lambda, const Element& x) const {
    if (is_zero(lambda)) throw error(errc::zero_form, "linear form is zero");
    std::vector<int> out(n_);
    Element cur = x;
    Element al = alpha();
    for (int k = 0; k < n_; ++k) {
        out[k] = trace_to_prime(mul(lambda, cur));
        cur = mul(cur, al);
    }
    return out;
}

Element FieldCtx::subfield_generator(int m) const {
    require_divisor(m);
    uint64_t sub_order = ipow_checked(p_, m) - 1;
    return from_pow(order_ / sub_order);
}

bool FieldCtx::in_subfield(int m, const Element& a) const {
    require_divisor(m);
    return frobenius(a, m) == a;
}

std::vector<int> FieldCtx::subfield_coords(int m, const Element& a) const {
    if (!in_subfield(m, a))
        throw error(errc::not_in_subfield, "element is not fixed by the subfield Frobenius");
    Element g = subfield_generator(m);
    GfpMatrix basis = GfpMatrix::zero(p_, n_, m);
    Element cur = one();
    for (int k = 0; k < m; ++k) {
        for (int r = 0; r < n_; ++r) basis.at(r, k) = cur.c[r];
        cur = mul(cur, g);
    }
    auto x = gfp_solve(basis, a.c);
    if (!x) throw error(errc::not_in_subfield, "no subfield coordinates");  // unreachable
    return *x;
}

int FieldCtx::subfield_trace_to_prime(int m, const Element& a) const {
    if (!in_subfield(m, a))
        throw error(errc::not_in_subfield, "element is not in GF(p^m)");
    Element acc = zero();
    Element cur = a;
    for (int i = 0; i < m; ++i) {
        acc = add(acc, cur);
        if (i + 1 < m) cur = pow(cur, p_);
    }
    for (int i = 1; i < n_; ++i) assert(acc.c[i] == 0);
    return acc.c[0];
}

SubfieldPoly FieldCtx::minimal_poly(int m, const Element& a) const {
    require_divisor(m);
    std::vector<Element> orbit;
    Element cur = a;
    do {
        orbit.push_back(cur);
        cur = frobenius(cur, m);
    } while (!(cur == a));
    // product of (x - root)
    std::vector<Element> coeffs = {one()};
    for (const Element& root : orbit) {
        std::vector<Element> next(coeffs.size() + 1, zero());
        Element nr = neg(root);
        for (size_t k = 0; k < coeffs.size(); ++k) {
            next[k + 1] = add(next[k + 1], coeffs[k]);
            next[k] = add(next[k], mul(nr, coeffs[k]));
        }
        coeffs = std::move(next);
    }
    for (const Element& c : coeffs) assert(in_subfield(m, c));
    return SubfieldPoly{m, std::move(coeffs)};
}

std::vector<SubfieldPoly> FieldCtx::factor_unity(int m, uint64_t t) const {
    require_divisor(m);
    if (t == 0 || order_ % t != 0)
        throw error(errc::not_a_divisor, "t must divide p^n - 1");
    Element gamma = from_pow(order_ / t);
    uint64_t pm = ipow_checked(p_, m) % t;
    std::vector<char> seen(t, 0);
    std::vector<SubfieldPoly> out;
    for (uint64_t j = 0; j < t; ++j) {
        if (seen[j]) continue;
        uint64_t cur = j;
        do {
            seen[cur] = 1;
            cur = cur * pm % t;
        } while (cur != j);
        out.push_back(minimal_poly(m, pow(gamma, static_cast<int64_t>(j))));
    }
    return out;
}

Element FieldCtx::eval_poly(const SubfieldPoly& f, const Element& x) const {
    Element acc = zero();
    for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) acc = add(mul(acc, x), *it);
    return acc;
}

uint64_t FieldCtx::pack(const Element& a) const {
    uint64_t v = 0;
    for (int i = n_ - 1; i >= 0; --i) v = v * p_ + static_cast<uint64_t>(a.c[i]);
    return v;
}

Element FieldCtx::unpack(uint64_t v) const {
    std::vector<int> c(n_);
    for (int i = 0; i < n_; ++i) {
        c[i] = static_cast<int>(v % p_);
        v /= p_;
    }
    return Element{c};
}

std::string FieldCtx::format_element(const Element& a) const {
    std::ostringstream os;
    os << "poly:[";
    for (int i = 0; i < n_; ++i) {
        if (i) os << ',';
        os << a.c[i];
    }
    os << ']';
    return os.str();
}

std::string FieldCtx::format_element_pow(const Element& a) const {
    if (is_zero(a)) return "0";
    return "pow:" + std::to_string(dlog(a));
}

Element FieldCtx::parse_element(const std::string& s) const {
    if (s.rfind("pow:", 0) == 0) return from_pow(std::stoull(s.substr(4)));
    if (s.rfind("poly:", 0) == 0) {
        std::string body = s.substr(5);
        if (body.size() < 2 || body.front() != '[' || body.back() != ']')
            throw error(errc::out_of_bounds, "bad element syntax: " + s);
        body = body.substr(1, body.size() - 2);
        std::vector<int> c;
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, ',')) c.push_back(std::stoi(tok));
        return from_coeffs(std::move(c));
    }
    return unpack(std::stoull(s) % q_);
}

}  // namespace dbt
