/*
   Copyright 2026 The camols Authors

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

#include "camols/gf.hpp"

#include <algorithm>
#include <string>

namespace camols {

namespace {

using Digits = std::vector<std::uint32_t>;

void trim(Digits& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inverse_mod_p(std::uint32_t a, std::uint32_t p) {
    // a^(p-2) by square-and-multiply; p < 2^9 so products fit easily.
    std::uint64_t result = 1, base = a % p;
    for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

// Remainder of f modulo g over F_p. g must be nonzero.
Digits rem_mod_p(Digits f, const Digits& g, std::uint32_t p) {
    trim(f);
    const std::size_t dg = g.size() - 1;
    const std::uint32_t lead_inv = inverse_mod_p(g.back(), p);
    while (f.size() > dg) {
        const std::size_t shift = f.size() - 1 - dg;
        const std::uint32_t factor = f.back() * lead_inv % p;
        for (std::size_t i = 0; i <= dg; ++i) {
            f[shift + i] = (f[shift + i] + p - factor * g[i] % p) % p;
        }
        trim(f);
    }
    return f;
}

Digits to_digits(std::uint32_t index, std::uint32_t p, std::uint32_t alpha) {
    Digits d(alpha);
    for (auto& digit : d) {
        digit = index % p;
        index /= p;
    }
    return d;
}

std::uint32_t from_digits(const Digits& d, std::uint32_t p) {
    std::uint32_t index = 0;
    for (std::size_t i = d.size(); i-- > 0;) index = index * p + d[i];
    return index;
}

std::uint32_t ipow(std::uint32_t base, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e-- > 0) {
        r *= base;
        if (r > 0xffffffffull) throw Error(Errc::FieldTooLarge, "field order overflows");
    }
    return static_cast<std::uint32_t>(r);
}

}  // namespace

bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_irreducible_mod_p(std::span<const std::uint32_t> coeffs, std::uint32_t p) {
    Digits f(coeffs.begin(), coeffs.end());
    for (auto& c : f) c %= p;
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t degree = f.size() - 1;
    if (degree == 1) return true;
    for (std::size_t d = 1; d <= degree / 2; ++d) {
        // every monic divisor candidate of degree d
        const std::uint32_t count = ipow(p, static_cast<std::uint32_t>(d));
        for (std::uint32_t low = 0; low < count; ++low) {
            Digits g = to_digits(low, p, static_cast<std::uint32_t>(d));
            g.push_back(1);
            if (rem_mod_p(f, g, p).empty()) return false;
        }
    }
    return true;
}

struct FieldSpec::Tables {
    std::vector<std::uint16_t> add;
    std::vector<std::uint16_t> mul;
    std::vector<std::uint16_t> neg;
    std::vector<std::uint16_t> inv;
};

FieldSpec::FieldSpec(std::uint32_t p, std::uint32_t alpha, std::optional<std::vector<std::uint32_t>> modulus)
    : p_(p), alpha_(alpha) {
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (alpha < 1) throw Error(Errc::DegreeMismatch, "extension degree must be at least 1");
    if (p > kMaxFieldOrder || alpha > 8) throw Error(Errc::FieldTooLarge, "field order exceeds 257");
    q_ = ipow(p, alpha);
    if (q_ > kMaxFieldOrder) throw Error(Errc::FieldTooLarge, "field order " + std::to_string(q_) + " exceeds 257");

    if (modulus) {
        Digits m = *modulus;
        for (auto c : m) {
            if (c >= p) throw Error(Errc::ElementOutOfRange, "modulus coefficient out of range");
        }
        trim(m);
        if (alpha == 1 && m.empty()) {
            // absent and empty are the same thing for a prime field
        } else {
            if (m.size() != alpha + 1) throw Error(Errc::DegreeMismatch, "modulus degree differs from alpha");
            if (m.back() != 1) throw Error(Errc::ReducibleModulus, "modulus must be monic");
            if (!is_irreducible_mod_p(m, p)) throw Error(Errc::ReducibleModulus, "modulus is reducible");
            if (alpha > 1) modulus_ = std::move(m);
        }
    } else if (alpha > 1) {
        // Counting with c0 as the most significant digit walks the
        // candidates in lexicographic order of (c0, c1, ..., c_{alpha-1}).
        const std::uint32_t count = ipow(p, alpha);
        for (std::uint32_t k = 0; k < count && modulus_.empty(); ++k) {
            Digits m(alpha + 1, 0);
            std::uint32_t rest = k;
            for (std::size_t i = alpha; i-- > 0;) {
                m[i] = rest % p;
                rest /= p;
            }
            m[alpha] = 1;
            if (is_irreducible_mod_p(m, p)) modulus_ = std::move(m);
        }
    }

    auto tables = std::make_shared<Tables>();
    const std::size_t q = q_;
    tables->add.resize(q * q);
    tables->mul.resize(q * q);
    tables->neg.resize(q);
    tables->inv.resize(q, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
        const Digits da = to_digits(a, p_, alpha_);
        for (std::uint32_t b = 0; b < q_; ++b) {
            const Digits db = to_digits(b, p_, alpha_);
            Digits sum(alpha_);
            for (std::uint32_t i = 0; i < alpha_; ++i) sum[i] = (da[i] + db[i]) % p_;
            Digits prod(2 * alpha_, 0);
            for (std::uint32_t i = 0; i < alpha_; ++i) {
                for (std::uint32_t j = 0; j < alpha_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
            }
            if (alpha_ > 1) {
                prod = rem_mod_p(prod, modulus_, p_);
            } else {
                trim(prod);
            }
            prod.resize(alpha_, 0);
            tables->add[a * q + b] = static_cast<std::uint16_t>(from_digits(sum, p_));
            tables->mul[a * q + b] = static_cast<std::uint16_t>(from_digits(prod, p_));
        }
    }
    for (std::uint32_t a = 0; a < q_; ++a) {
        for (std::uint32_t b = 0; b < q_; ++b) {
            if (tables->add[a * q + b] == 0) tables->neg[a] = static_cast<std::uint16_t>(b);
            if (tables->mul[a * q + b] == 1) tables->inv[a] = static_cast<std::uint16_t>(b);
        }
    }
    tables_ = std::move(tables);
}

FieldSpec FieldSpec::of_order(std::uint32_t q) {
    if (q < 2) throw Error(Errc::NotPrime, "field order must be a prime power");
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t alpha = 0;
    std::uint32_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++alpha;
    }
    if (rest != 1) throw Error(Errc::NotPrime, std::to_string(q) + " is not a prime power");
    return FieldSpec(p, alpha);
}

void FieldSpec::check(Element a) const {
    if (a.index() >= q_) {
        throw Error(Errc::ElementOutOfRange,
                    "element " + std::to_string(a.index()) + " not in F_" + std::to_string(q_));
    }
}

Element FieldSpec::element(std::uint32_t index) const {
    Element e(index);
    check(e);
    return e;
}

std::vector<Element> FieldSpec::elements(std::span<const std::uint32_t> indices) const {
    std::vector<Element> out;
    out.reserve(indices.size());
    for (auto i : indices) out.push_back(element(i));
    return out;
}

std::vector<Element> FieldSpec::elements(std::initializer_list<std::uint32_t> indices) const {
    return elements(std::span<const std::uint32_t>(indices.begin(), indices.size()));
}

Element FieldSpec::add(Element a, Element b) const {
    check(a);
    check(b);
    return Element(tables_->add[a.index() * q_ + b.index()]);
}

Element FieldSpec::sub(Element a, Element b) const { return add(a, neg(b)); }

Element FieldSpec::neg(Element a) const {
    check(a);
    return Element(tables_->neg[a.index()]);
}

Element FieldSpec::mul(Element a, Element b) const {
    check(a);
    check(b);
    return Element(tables_->mul[a.index() * q_ + b.index()]);
}

Element FieldSpec::inv(Element a) const {
    check(a);
    if (a.is_zero()) throw Error(Errc::DivisionByZero, "zero has no inverse");
    return Element(tables_->inv[a.index()]);
}

Element FieldSpec::pow(Element a, std::uint64_t e) const {
    check(a);
    Element result = one();
    Element base = a;
    for (; e > 0; e >>= 1) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
    }
    return result;
}

std::vector<Element> FieldSpec::all_elements() const {
    std::vector<Element> out;
    out.reserve(q_);
    for (std::uint32_t i = 0; i < q_; ++i) out.emplace_back(i);
    return out;
}

}  // namespace camols
