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

#ifndef CAMOLS_DESIGNS_HPP
#define CAMOLS_DESIGNS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "camols/ca.hpp"
#include "camols/gf.hpp"
#include "camols/poly.hpp"

namespace camols {

/// Rows of integer symbols; used for candidate squares and arrays.
using Grid = std::vector<std::vector<std::uint32_t>>;

/// Largest square order built from a CA.
inline constexpr std::uint64_t kMaxSquareOrder = 4096;

/// The bijection phi: A^m -> {1..q^m} and its inverse psi.
///
/// phi(x) = 1 + sum_i index(x_i) q^i, i.e. mixed radix with the leftmost
/// coordinate least significant.
class Encoding {
   public:
    Encoding(FieldSpec field, std::size_t m);

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t m() const noexcept { return m_; }
    std::uint64_t order() const noexcept { return order_; }

    std::uint64_t encode(std::span<const Element> x) const;
    std::vector<Element> decode(std::uint64_t i) const;

   private:
    FieldSpec field_;
    std::size_t m_;
    std::uint64_t order_;
};

/// Where a square came from: the CA <2m, r, m/2r, rule>.
struct SquareProvenance {
    LocalRule rule;
    std::size_t m;
};

/// A validated Latin square over {1..N}, stored row-major.
class LatinSquare {
   public:
    /// Throws NotLatin unless every row and column is a permutation of 1..N.
    LatinSquare(std::size_t order, std::vector<std::uint32_t> entries,
                std::optional<SquareProvenance> provenance = std::nullopt);
    static LatinSquare from_rows(const Grid& rows, std::optional<SquareProvenance> provenance = std::nullopt);

    std::size_t order() const noexcept { return order_; }
    /// 0-based coordinates; values are 1-based symbols.
    std::uint32_t operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * order_ + j]; }
    const std::vector<std::uint32_t>& entries() const noexcept { return entries_; }
    const std::optional<SquareProvenance>& provenance() const noexcept { return provenance_; }
    Grid rows() const;

    friend bool operator==(const LatinSquare& a, const LatinSquare& b) noexcept {
        return a.order_ == b.order_ && a.entries_ == b.entries_;
    }

   private:
    std::size_t order_;
    std::vector<std::uint32_t> entries_;
    std::optional<SquareProvenance> provenance_;
};

bool is_latin(const Grid& candidate);

/// S(i,j) = phi(F(psi(i) || psi(j))) for the CA <2m, r, m/2r, rule>.
LatinSquare square_from_ca(const LocalRule& rule, std::size_t m);

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b);

/// The superposed square as (a(i,j), b(i,j)) pairs, row-major.
std::vector<std::pair<std::uint32_t, std::uint32_t>> superpose(const LatinSquare& a, const LatinSquare& b);

/// Every unordered pair orthogonal. Needs at least two squares.
bool mols_check(std::span<const LatinSquare> squares);

/// gcd(f, g) = 1 for two bipermutive rule polynomials of equal even degree.
bool squares_orthogonal_by_polynomials(const Polynomial& f, const Polynomial& g);

/// Squares of the linear CA <2m, r, t, f_i> with m = 2rt, one per polynomial.
std::vector<LatinSquare> mols_from_polynomials(std::span<const Polynomial> polys, std::size_t t);

/// A t-(v, k, lambda) orthogonal array; symbols are 1..v.
struct OrthogonalArray {
    std::uint32_t t = 2;
    std::uint32_t v = 0;
    std::uint32_t k = 0;
    std::uint32_t lambda = 1;
    Grid rows;

    /// Copy with column `col` (0-based) moved to the end, others in order.
    OrthogonalArray with_column_last(std::size_t col) const;

    friend bool operator==(const OrthogonalArray&, const OrthogonalArray&) = default;
};

/// v^2 x (n+2) array: all ordered pairs in lexicographic order in the first
/// two columns, then column h reads square h-2 at those coordinates.
OrthogonalArray oa_from_mols(std::span<const LatinSquare> squares);

/// Exhaustive strength check over every t-subset of columns.
bool oa_validate(const Grid& rows, std::uint32_t v, std::uint32_t t, std::uint32_t lambda);
bool oa_validate(const OrthogonalArray& oa);

enum class RuleClass { BipermutiveAll, BipermutiveLinear };

std::string_view rule_class_name(RuleClass cls) noexcept;
RuleClass parse_rule_class(std::string_view name);

/// Every rule of the class, in lexicographic order of table entries (for
/// BipermutiveAll) or coefficients (for BipermutiveLinear).
std::vector<LocalRule> enumerate_rules(const FieldSpec& field, std::size_t r, RuleClass cls);

/// CLI-style identifier: "wolfram:<n>:r<r>" or "linear:<q>:<c0,...>".
std::string rule_identifier(const LocalRule& rule);

struct Census {
    FieldSpec field;
    std::size_t r = 0;
    std::size_t m = 0;
    RuleClass cls = RuleClass::BipermutiveLinear;
    std::vector<std::string> rules;
    /// Unordered pairs of distinct rules (indices into `rules`, i < j).
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    /// Pair counts under alternative counting conventions.
    std::map<std::string, std::uint64_t> conventions;

    std::uint64_t pair_count() const noexcept { return pairs.size(); }
};

/// Every unordered pair of distinct rules of the class whose squares at
/// block length m are orthogonal.
Census search_orthogonal_pairs(const FieldSpec& field, std::size_t r, std::size_t m, RuleClass cls);

/// Ordered pairs (f, g) of monic degree-n polynomials with constant terms a
/// and b such that gcd(f, g) = 1.
std::uint64_t count_coprime_pairs(const FieldSpec& field, std::size_t n, Element a, Element b);

}  // namespace camols

#endif
