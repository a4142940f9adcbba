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

#ifndef CAMOLS_GF_HPP
#define CAMOLS_GF_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "camols/error.hpp"

namespace camols {

/// An element of F_q, identified by its canonical index in 0..q-1.
///
/// For prime fields the index is the residue itself. For extension fields it
/// is the base-p digit string of the coefficient vector over F_p, with digit i
/// holding the coefficient of X^i. Index 0 is always the additive identity and
/// index 1 the multiplicative identity; ascending index order is the total
/// order used when enumerating A^m.
class Element {
   public:
    constexpr Element() noexcept = default;
    constexpr explicit Element(std::uint32_t index) noexcept : index_(index) {}

    constexpr std::uint32_t index() const noexcept { return index_; }
    constexpr bool is_zero() const noexcept { return index_ == 0; }

    friend constexpr auto operator<=>(Element, Element) noexcept = default;

   private:
    std::uint32_t index_ = 0;
};

/// Largest supported field order.
inline constexpr std::uint32_t kMaxFieldOrder = 257;

/// The alphabet F_q with q = p^alpha.
///
/// Immutable after construction; copies share the precomputed operation
/// tables, so a FieldSpec is cheap to pass by value.
class FieldSpec {
   public:
    /// Validates p and alpha. For alpha > 1 the modulus (coefficients over
    /// F_p, constant term first) must be monic, of degree alpha and
    /// irreducible; when omitted the lexicographically smallest such
    /// polynomial is chosen (coefficients compared constant term first).
    FieldSpec(std::uint32_t p, std::uint32_t alpha, std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    /// The field of order q, which must be a prime power.
    static FieldSpec of_order(std::uint32_t q);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t alpha() const noexcept { return alpha_; }
    std::uint32_t q() const noexcept { return q_; }
    /// Empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    Element zero() const noexcept { return Element(0); }
    Element one() const noexcept { return Element(1); }

    /// Checked conversion from an index.
    Element element(std::uint32_t index) const;
    std::vector<Element> elements(std::span<const std::uint32_t> indices) const;
    std::vector<Element> elements(std::initializer_list<std::uint32_t> indices) const;
    bool contains(Element a) const noexcept { return a.index() < q_; }

    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const;
    Element neg(Element a) const;
    Element mul(Element a, Element b) const;
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    Element pow(Element a, std::uint64_t e) const;

    /// All q elements in ascending index order.
    std::vector<Element> all_elements() const;

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
        return a.p_ == b.p_ && a.alpha_ == b.alpha_ && a.modulus_ == b.modulus_;
    }

   private:
    struct Tables;

    void check(Element a) const;

    std::uint32_t p_;
    std::uint32_t alpha_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::shared_ptr<const Tables> tables_;
};

bool is_prime(std::uint32_t n) noexcept;

/// Irreducibility of a polynomial over the prime field F_p by trial division
/// (coefficients constant term first, need not be normalized).
bool is_irreducible_mod_p(std::span<const std::uint32_t> coeffs, std::uint32_t p);

}  // namespace camols

#endif
