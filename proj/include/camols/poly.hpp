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

#ifndef CAMOLS_POLY_HPP
#define CAMOLS_POLY_HPP

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "camols/gf.hpp"

namespace camols {

/// Univariate polynomial over F_q, coefficients stored constant term first.
///
/// Always normalized: the last stored coefficient is nonzero, and the zero
/// polynomial stores no coefficients at all.
class Polynomial {
   public:
    /// Degree reported for the zero polynomial.
    static constexpr int kZeroDegree = -1;

    explicit Polynomial(FieldSpec field) : field_(std::move(field)) {}
    Polynomial(FieldSpec field, std::vector<Element> coeffs);

    /// Checked construction from element indices, constant term first.
    static Polynomial from_indices(const FieldSpec& field, std::initializer_list<std::uint32_t> indices);
    static Polynomial from_indices(const FieldSpec& field, const std::vector<std::uint32_t>& indices);
    static Polynomial constant(const FieldSpec& field, Element c);
    /// c * X^k
    static Polynomial monomial(const FieldSpec& field, Element c, std::size_t k);

    const FieldSpec& field() const noexcept { return field_; }
    const std::vector<Element>& coeffs() const noexcept { return coeffs_; }
    std::vector<std::uint32_t> indices() const;

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == Element(1); }
    /// Coefficient of X^i; zero past the degree.
    Element operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : Element(0); }
    Element leading() const noexcept { return coeffs_.empty() ? Element(0) : coeffs_.back(); }
    bool is_monic() const noexcept { return leading() == Element(1); }

    Element evaluate(Element x) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }

   private:
    FieldSpec field_;
    std::vector<Element> coeffs_;
};

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_sub(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
Polynomial poly_scale(const Polynomial& f, Element c);
Polynomial poly_pow(const Polynomial& f, std::uint64_t t);

/// Euclidean division f = quotient * g + remainder with deg remainder < deg g.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& f, const Polynomial& g);

/// f scaled to leading coefficient 1 (zero stays zero).
Polynomial poly_monic(const Polynomial& f);

/// Monic gcd via the Euclidean algorithm.
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);

bool poly_coprime(const Polynomial& f, const Polynomial& g);

/// Determinant of the Sylvester matrix of f and g; nonzero iff coprime.
/// Requires deg f >= 1 and deg g >= 1.
Element poly_resultant(const Polynomial& f, const Polynomial& g);

/// Trial division by every monic polynomial of degree <= deg(f)/2.
bool poly_is_irreducible(const Polynomial& f);

/// All polynomials of exact degree `degree` (monic, or any nonzero leading
/// coefficient), optionally pinned to a constant term, in lexicographic order
/// of their coefficient sequences (constant term compared first).
std::vector<Polynomial> poly_enumerate(const FieldSpec& field, std::size_t degree, bool monic,
                                       std::optional<Element> constant_term = std::nullopt);

}  // namespace camols

#endif
