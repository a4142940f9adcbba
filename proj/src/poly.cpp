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

#include "camols/poly.hpp"

#include <algorithm>
#include <string>

#include "camols/linalg.hpp"

namespace camols {

namespace {

void require_same_field(const Polynomial& f, const Polynomial& g) {
    if (!(f.field() == g.field())) throw Error(Errc::FieldMismatch, "polynomials over different fields");
}

constexpr std::uint64_t kMaxEnumeration = std::uint64_t{1} << 24;

}  // namespace

Polynomial::Polynomial(FieldSpec field, std::vector<Element> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (auto c : coeffs_) {
        if (!field_.contains(c)) throw Error(Errc::ElementOutOfRange, "coefficient outside the field");
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::from_indices(const FieldSpec& field, std::initializer_list<std::uint32_t> indices) {
    return Polynomial(field, field.elements(indices));
}

Polynomial Polynomial::from_indices(const FieldSpec& field, const std::vector<std::uint32_t>& indices) {
    return Polynomial(field, field.elements(indices));
}

Polynomial Polynomial::constant(const FieldSpec& field, Element c) { return Polynomial(field, {c}); }

Polynomial Polynomial::monomial(const FieldSpec& field, Element c, std::size_t k) {
    std::vector<Element> coeffs(k + 1, field.zero());
    coeffs[k] = c;
    return Polynomial(field, std::move(coeffs));
}

std::vector<std::uint32_t> Polynomial::indices() const {
    std::vector<std::uint32_t> out;
    out.reserve(coeffs_.size());
    for (auto c : coeffs_) out.push_back(c.index());
    return out;
}

Element Polynomial::evaluate(Element x) const {
    Element acc = field_.zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), coeffs_[i]);
    return acc;
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) {
    require_same_field(f, g);
    const auto& F = f.field();
    std::vector<Element> out(std::max(f.coeffs().size(), g.coeffs().size()), F.zero());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(f[i], g[i]);
    return Polynomial(F, std::move(out));
}

Polynomial poly_sub(const Polynomial& f, const Polynomial& g) {
    require_same_field(f, g);
    const auto& F = f.field();
    std::vector<Element> out(std::max(f.coeffs().size(), g.coeffs().size()), F.zero());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.sub(f[i], g[i]);
    return Polynomial(F, std::move(out));
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
    require_same_field(f, g);
    const auto& F = f.field();
    if (f.is_zero() || g.is_zero()) return Polynomial(F);
    std::vector<Element> out(f.coeffs().size() + g.coeffs().size() - 1, F.zero());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
            out[i + j] = F.add(out[i + j], F.mul(f.coeffs()[i], g.coeffs()[j]));
        }
    }
    return Polynomial(F, std::move(out));
}

Polynomial poly_scale(const Polynomial& f, Element c) {
    const auto& F = f.field();
    std::vector<Element> out;
    out.reserve(f.coeffs().size());
    for (auto a : f.coeffs()) out.push_back(F.mul(a, c));
    return Polynomial(F, std::move(out));
}

Polynomial poly_pow(const Polynomial& f, std::uint64_t t) {
    Polynomial result = Polynomial::constant(f.field(), f.field().one());
    Polynomial base = f;
    for (; t > 0; t >>= 1) {
        if (t & 1) result = poly_mul(result, base);
        if (t > 1) base = poly_mul(base, base);
    }
    return result;
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& f, const Polynomial& g) {
    require_same_field(f, g);
    if (g.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
    const auto& F = f.field();
    std::vector<Element> rem = f.coeffs();
    const std::size_t dg = static_cast<std::size_t>(g.degree());
    std::vector<Element> quot(rem.size() > dg ? rem.size() - dg : 0, F.zero());
    const Element lead_inv = F.inv(g.leading());
    for (std::size_t top = rem.size(); top-- > dg;) {
        if (rem[top].is_zero()) continue;
        const Element factor = F.mul(rem[top], lead_inv);
        const std::size_t shift = top - dg;
        quot[shift] = factor;
        for (std::size_t i = 0; i <= dg; ++i) rem[shift + i] = F.sub(rem[shift + i], F.mul(factor, g.coeffs()[i]));
    }
    return {Polynomial(F, std::move(quot)), Polynomial(F, std::move(rem))};
}

Polynomial poly_monic(const Polynomial& f) {
    if (f.is_zero()) return f;
    return poly_scale(f, f.field().inv(f.leading()));
}

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
    require_same_field(f, g);
    if (f.is_zero() && g.is_zero()) throw Error(Errc::BothZero, "gcd of two zero polynomials");
    Polynomial a = f;
    Polynomial b = g;
    while (!b.is_zero()) {
        Polynomial r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

bool poly_coprime(const Polynomial& f, const Polynomial& g) { return poly_gcd(f, g).degree() == 0; }

Element poly_resultant(const Polynomial& f, const Polynomial& g) {
    require_same_field(f, g);
    if (f.degree() < 1 || g.degree() < 1) throw Error(Errc::DegreeTooSmall, "resultant needs degree >= 1");
    return determinant(sylvester_matrix_general(f, g));
}

bool poly_is_irreducible(const Polynomial& f) {
    if (f.degree() < 1) return false;
    const std::size_t half = static_cast<std::size_t>(f.degree()) / 2;
    for (std::size_t d = 1; d <= half; ++d) {
        for (const auto& g : poly_enumerate(f.field(), d, true)) {
            if (poly_divmod(f, g).second.is_zero()) return false;
        }
    }
    return true;
}

std::vector<Polynomial> poly_enumerate(const FieldSpec& field, std::size_t degree, bool monic,
                                       std::optional<Element> constant_term) {
    if (constant_term && !field.contains(*constant_term)) {
        throw Error(Errc::ElementOutOfRange, "constant term outside the field");
    }
    // Allowed values per coefficient position, ascending.
    std::vector<std::vector<Element>> choices(degree + 1, field.all_elements());
    if (monic) {
        choices[degree] = {field.one()};
    } else {
        choices[degree].erase(choices[degree].begin());
    }
    if (constant_term) {
        auto& c0 = choices[0];
        const bool allowed = std::find(c0.begin(), c0.end(), *constant_term) != c0.end();
        c0.clear();
        if (allowed) c0.push_back(*constant_term);
    }
    std::uint64_t total = 1;
    for (const auto& c : choices) {
        total *= c.size();
        if (total > kMaxEnumeration) throw Error(Errc::SearchTooLarge, "polynomial enumeration too large");
    }
    std::vector<Polynomial> out;
    if (total == 0) return out;
    out.reserve(total);

    // Odometer with the constant term as the most significant digit.
    std::vector<std::size_t> pos(degree + 1, 0);
    for (;;) {
        std::vector<Element> coeffs(degree + 1);
        for (std::size_t i = 0; i <= degree; ++i) coeffs[i] = choices[i][pos[i]];
        out.emplace_back(field, std::move(coeffs));
        std::size_t i = degree + 1;
        while (i-- > 0) {
            if (++pos[i] < choices[i].size()) break;
            pos[i] = 0;
            if (i == 0) return out;
        }
    }
}

}  // namespace camols
