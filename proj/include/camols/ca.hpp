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

#ifndef CAMOLS_CA_HPP
#define CAMOLS_CA_HPP

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "camols/gf.hpp"
#include "camols/poly.hpp"

namespace camols {

using Configuration = std::vector<Element>;

/// Local rules with more table entries than this are rejected.
inline constexpr std::uint64_t kMaxTableSize = std::uint64_t{1} << 20;

/// A local rule f: A^(2r+1) -> A, either a linear form a_0 x_0 + ... + a_2r x_2r
/// or an explicit table.
///
/// Tables are indexed by the mixed-radix encoding of the window with x_0 as
/// the least significant digit: index = sum_k index(x_k) * q^k.
class LocalRule {
   public:
    struct Linear {
        std::vector<Element> coeffs;
    };
    struct Table {
        std::vector<Element> entries;
    };

    static LocalRule linear(FieldSpec field, std::vector<Element> coeffs);
    static LocalRule table(FieldSpec field, std::size_t radius, std::vector<Element> entries);

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t radius() const noexcept { return radius_; }
    std::size_t window() const noexcept { return 2 * radius_ + 1; }
    bool is_linear() const noexcept { return std::holds_alternative<Linear>(body_); }

    /// Throws NonlinearRule for table rules.
    const std::vector<Element>& coeffs() const;
    /// Table entries; linear rules are tabulated on demand.
    std::vector<Element> entries() const;

    /// f applied to a window of exactly 2r+1 cells.
    Element operator()(std::span<const Element> window) const;

    /// Same function on every window (regardless of representation).
    bool same_function(const LocalRule& other) const;

   private:
    LocalRule(FieldSpec field, std::size_t radius, std::variant<Linear, Table> body)
        : field_(std::move(field)), radius_(radius), body_(std::move(body)) {}

    FieldSpec field_;
    std::size_t radius_;
    std::variant<Linear, Table> body_;
};

/// q^(2r+1), or throws TableTooLarge past kMaxTableSize.
std::uint64_t table_size(std::uint32_t q, std::size_t window);

LocalRule rule_from_coeffs(const FieldSpec& field, std::vector<Element> coeffs);
LocalRule rule_from_coeffs(const FieldSpec& field, std::initializer_list<std::uint32_t> indices);

/// Binary table rule whose entry on window w is bit w of `number`.
LocalRule rule_from_wolfram(std::uint64_t number, std::size_t radius);

/// The Wolfram number of a binary rule with at most 64 table entries.
std::uint64_t wolfram_number(const LocalRule& rule);

Polynomial rule_polynomial(const LocalRule& rule);

struct Permutivity {
    bool leftmost = false;
    bool rightmost = false;

    bool bipermutive() const noexcept { return leftmost && rightmost; }
    friend bool operator==(const Permutivity&, const Permutivity&) = default;
};

Permutivity is_bipermutive(const LocalRule& rule);

/// One application of the global rule: output cell j is f(x_j, ..., x_{j+2r}).
Configuration global_step(const LocalRule& rule, std::span<const Element> x);

/// The automaton <n, r, t, f>, validated so that 1 <= t < floor(n / 2r).
class CaSpec {
   public:
    CaSpec(LocalRule rule, std::size_t n, std::size_t t);

    const LocalRule& rule() const noexcept { return rule_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t t() const noexcept { return t_; }
    std::size_t output_length() const noexcept { return n_ - 2 * rule_.radius() * t_; }

   private:
    LocalRule rule_;
    std::size_t n_;
    std::size_t t_;
};

/// F_{t-1} o ... o F_0 applied to x, which must have length n.
Configuration ca_apply(const CaSpec& spec, std::span<const Element> x);

/// The linear rule of radius r*t with polynomial p_f(X)^t.
LocalRule iterated_rule(const LocalRule& rule, std::size_t t);

/// f^t as a table, obtained by running t global steps on every window of
/// length 2rt+1.
LocalRule iterated_rule_table(const LocalRule& rule, std::size_t t);

}  // namespace camols

#endif
