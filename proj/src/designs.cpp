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

#include "camols/designs.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace camols {

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::size_t e, std::uint64_t limit, Errc err, const char* what) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        r *= base;
        if (r > limit) throw Error(err, what);
    }
    return r;
}

// Coefficients of a rule that happens to be linear, whatever its representation.
std::optional<std::vector<Element>> linear_form(const LocalRule& rule) {
    if (rule.is_linear()) return rule.coeffs();
    const auto& F = rule.field();
    const std::size_t w = rule.window();
    std::vector<Element> coeffs(w);
    Configuration unit(w, F.zero());
    for (std::size_t k = 0; k < w; ++k) {
        unit[k] = F.one();
        coeffs[k] = rule(unit);
        unit[k] = F.zero();
    }
    const auto candidate = LocalRule::linear(F, coeffs);
    if (!candidate.same_function(rule)) return std::nullopt;
    return coeffs;
}

}  // namespace

Encoding::Encoding(FieldSpec field, std::size_t m) : field_(std::move(field)), m_(m) {
    if (m_ < 1) throw Error(Errc::BadBlockLength, "block length must be positive");
    order_ = checked_pow(field_.q(), m_, std::uint64_t{1} << 32, Errc::OrderTooLarge, "q^m exceeds 2^32");
}

std::uint64_t Encoding::encode(std::span<const Element> x) const {
    if (x.size() != m_) {
        throw Error(Errc::LengthMismatch,
                    "expected a block of length " + std::to_string(m_) + ", got " + std::to_string(x.size()));
    }
    std::uint64_t index = 0;
    for (std::size_t i = m_; i-- > 0;) {
        if (!field_.contains(x[i])) throw Error(Errc::ElementOutOfRange, "cell outside the field");
        index = index * field_.q() + x[i].index();
    }
    return index + 1;
}

std::vector<Element> Encoding::decode(std::uint64_t i) const {
    if (i < 1 || i > order_) {
        throw Error(Errc::IndexOutOfRange, std::to_string(i) + " not in 1.." + std::to_string(order_));
    }
    std::uint64_t rest = i - 1;
    std::vector<Element> x(m_);
    for (auto& cell : x) {
        cell = Element(static_cast<std::uint32_t>(rest % field_.q()));
        rest /= field_.q();
    }
    return x;
}

LatinSquare::LatinSquare(std::size_t order, std::vector<std::uint32_t> entries, std::optional<SquareProvenance> provenance)
    : order_(order), entries_(std::move(entries)), provenance_(std::move(provenance)) {
    if (order_ < 1 || entries_.size() != order_ * order_) {
        throw Error(Errc::ShapeMismatch, "a square of order " + std::to_string(order_) + " needs order^2 entries");
    }
    if (!is_latin(rows())) throw Error(Errc::NotLatin, "rows and columns must be permutations of 1..N");
}

LatinSquare LatinSquare::from_rows(const Grid& rows, std::optional<SquareProvenance> provenance) {
    std::vector<std::uint32_t> entries;
    for (const auto& row : rows) {
        if (row.size() != rows.size()) throw Error(Errc::ShapeMismatch, "square must have N rows of N entries");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return LatinSquare(rows.size(), std::move(entries), std::move(provenance));
}

Grid LatinSquare::rows() const {
    Grid g(order_);
    for (std::size_t i = 0; i < order_; ++i) {
        g[i].assign(entries_.begin() + static_cast<std::ptrdiff_t>(i * order_),
                    entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * order_));
    }
    return g;
}

bool is_latin(const Grid& candidate) {
    const std::size_t n = candidate.size();
    if (n == 0) return false;
    for (const auto& row : candidate) {
        if (row.size() != n) return false;
    }
    std::vector<bool> seen(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), false);
        for (std::size_t j = 0; j < n; ++j) {
            const auto v = candidate[i][j];
            if (v < 1 || v > n || seen[v]) return false;
            seen[v] = true;
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        std::fill(seen.begin(), seen.end(), false);
        for (std::size_t i = 0; i < n; ++i) {
            const auto v = candidate[i][j];
            if (seen[v]) return false;
            seen[v] = true;
        }
    }
    return true;
}

LatinSquare square_from_ca(const LocalRule& rule, std::size_t m) {
    if (!is_bipermutive(rule).bipermutive()) throw Error(Errc::NotBipermutive, "rule is not bipermutive");
    const std::size_t two_r = 2 * rule.radius();
    if (m < two_r || m % two_r != 0) {
        throw Error(Errc::BadBlockLength,
                    "m=" + std::to_string(m) + " is not a positive multiple of 2r=" + std::to_string(two_r));
    }
    const auto order = checked_pow(rule.field().q(), m, kMaxSquareOrder, Errc::OrderTooLarge,
                                   "square order q^m exceeds 4096");
    const Encoding enc(rule.field(), m);
    const CaSpec spec(rule, 2 * m, m / two_r);

    std::vector<std::vector<Element>> blocks;
    blocks.reserve(order);
    for (std::uint64_t i = 1; i <= order; ++i) blocks.push_back(enc.decode(i));

    std::vector<std::uint32_t> entries(order * order);
    Configuration c(2 * m);
    for (std::uint64_t i = 0; i < order; ++i) {
        std::copy(blocks[i].begin(), blocks[i].end(), c.begin());
        for (std::uint64_t j = 0; j < order; ++j) {
            std::copy(blocks[j].begin(), blocks[j].end(), c.begin() + static_cast<std::ptrdiff_t>(m));
            entries[i * order + j] = static_cast<std::uint32_t>(enc.encode(ca_apply(spec, c)));
        }
    }
    return LatinSquare(order, std::move(entries), SquareProvenance{rule, m});
}

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
    if (a.order() != b.order()) throw Error(Errc::OrderMismatch, "squares of different orders");
    const std::size_t n = a.order();
    std::vector<bool> seen(n * n, false);
    for (std::size_t k = 0; k < n * n; ++k) {
        const std::size_t slot = (a.entries()[k] - 1) * n + (b.entries()[k] - 1);
        if (seen[slot]) return false;
        seen[slot] = true;
    }
    return true;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> superpose(const LatinSquare& a, const LatinSquare& b) {
    if (a.order() != b.order()) throw Error(Errc::OrderMismatch, "squares of different orders");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    out.reserve(a.entries().size());
    for (std::size_t k = 0; k < a.entries().size(); ++k) out.emplace_back(a.entries()[k], b.entries()[k]);
    return out;
}

bool mols_check(std::span<const LatinSquare> squares) {
    if (squares.size() < 2) throw Error(Errc::TooFewSquares, "a MOLS check needs at least two squares");
    for (const auto& s : squares) {
        if (s.order() != squares.front().order()) throw Error(Errc::OrderMismatch, "squares of different orders");
    }
    for (std::size_t i = 0; i < squares.size(); ++i) {
        for (std::size_t j = i + 1; j < squares.size(); ++j) {
            if (!are_orthogonal(squares[i], squares[j])) return false;
        }
    }
    return true;
}

namespace {

void require_rule_polynomial(const Polynomial& f, int degree) {
    if (f.degree() != degree || degree < 2 || degree % 2 != 0) {
        throw Error(Errc::DegreeMismatch, "rule polynomials must share one even degree 2r >= 2");
    }
    if (f[0].is_zero()) throw Error(Errc::NotBipermutive, "rule polynomial has a zero constant term");
}

}  // namespace

bool squares_orthogonal_by_polynomials(const Polynomial& f, const Polynomial& g) {
    if (!(f.field() == g.field())) throw Error(Errc::FieldMismatch, "polynomials over different fields");
    require_rule_polynomial(f, f.degree());
    require_rule_polynomial(g, f.degree());
    return poly_coprime(f, g);
}

std::vector<LatinSquare> mols_from_polynomials(std::span<const Polynomial> polys, std::size_t t) {
    if (polys.empty()) throw Error(Errc::TooFewSquares, "no polynomials given");
    if (t < 1) throw Error(Errc::BadBlockLength, "t must be at least 1");
    const int degree = polys.front().degree();
    for (const auto& f : polys) {
        if (!(f.field() == polys.front().field())) throw Error(Errc::FieldMismatch, "polynomials over different fields");
        require_rule_polynomial(f, degree);
    }
    for (std::size_t i = 0; i < polys.size(); ++i) {
        for (std::size_t j = i + 1; j < polys.size(); ++j) {
            if (!poly_coprime(polys[i], polys[j])) {
                throw Error(Errc::NotCoprime, "polynomials " + std::to_string(i) + " and " + std::to_string(j) +
                                                  " share a factor");
            }
        }
    }
    const std::size_t m = static_cast<std::size_t>(degree) * t;
    checked_pow(polys.front().field().q(), m, kMaxSquareOrder, Errc::OrderTooLarge, "square order q^m exceeds 4096");
    std::vector<LatinSquare> squares;
    squares.reserve(polys.size());
    for (const auto& f : polys) {
        squares.push_back(square_from_ca(LocalRule::linear(f.field(), f.coeffs()), m));
    }
    return squares;
}

OrthogonalArray OrthogonalArray::with_column_last(std::size_t col) const {
    if (col >= k) throw Error(Errc::IndexOutOfRange, "column out of range");
    OrthogonalArray out = *this;
    for (auto& row : out.rows) {
        const auto v = row[col];
        row.erase(row.begin() + static_cast<std::ptrdiff_t>(col));
        row.push_back(v);
    }
    return out;
}

OrthogonalArray oa_from_mols(std::span<const LatinSquare> squares) {
    if (squares.empty()) throw Error(Errc::NotMols, "no squares given");
    if (squares.size() >= 2 && !mols_check(squares)) throw Error(Errc::NotMols, "squares are not mutually orthogonal");
    const auto v = static_cast<std::uint32_t>(squares.front().order());
    OrthogonalArray oa;
    oa.t = 2;
    oa.v = v;
    oa.k = static_cast<std::uint32_t>(squares.size() + 2);
    oa.lambda = 1;
    oa.rows.reserve(std::size_t{v} * v);
    for (std::uint32_t i = 1; i <= v; ++i) {
        for (std::uint32_t j = 1; j <= v; ++j) {
            std::vector<std::uint32_t> row{i, j};
            for (const auto& s : squares) row.push_back(s(i - 1, j - 1));
            oa.rows.push_back(std::move(row));
        }
    }
    return oa;
}

bool oa_validate(const Grid& rows, std::uint32_t v, std::uint32_t t, std::uint32_t lambda) {
    if (rows.empty()) throw Error(Errc::ShapeMismatch, "empty array");
    const std::size_t k = rows.front().size();
    for (const auto& row : rows) {
        if (row.size() != k) throw Error(Errc::ShapeMismatch, "array rows of different lengths");
    }
    if (t < 2 || t > k) throw Error(Errc::ShapeMismatch, "strength must satisfy 2 <= t <= k");
    if (v < 1) return false;
    const std::uint64_t tuples = checked_pow(v, t, std::uint64_t{1} << 24, Errc::ShapeMismatch, "v^t too large");
    if (rows.size() != lambda * tuples) return false;
    for (const auto& row : rows) {
        for (auto x : row) {
            if (x < 1 || x > v) return false;
        }
    }
    // Walk all t-subsets of columns in lexicographic order.
    std::vector<std::size_t> cols(t);
    for (std::size_t i = 0; i < t; ++i) cols[i] = i;
    std::vector<std::uint32_t> count(tuples);
    for (;;) {
        std::fill(count.begin(), count.end(), 0);
        for (const auto& row : rows) {
            std::uint64_t slot = 0;
            for (auto c : cols) slot = slot * v + (row[c] - 1);
            ++count[slot];
        }
        if (std::any_of(count.begin(), count.end(), [&](std::uint32_t c) { return c != lambda; })) return false;
        std::size_t i = t;
        while (i-- > 0) {
            if (cols[i] < k - t + i) break;
            if (i == 0) return true;
        }
        ++cols[i];
        for (std::size_t j = i + 1; j < t; ++j) cols[j] = cols[j - 1] + 1;
    }
}

bool oa_validate(const OrthogonalArray& oa) {
    if (!oa.rows.empty() && oa.rows.front().size() != oa.k) return false;
    return oa_validate(oa.rows, oa.v, oa.t, oa.lambda);
}

std::string_view rule_class_name(RuleClass cls) noexcept {
    return cls == RuleClass::BipermutiveAll ? "bipermutive-all" : "bipermutive-linear";
}

RuleClass parse_rule_class(std::string_view name) {
    if (name == "bipermutive-all") return RuleClass::BipermutiveAll;
    if (name == "bipermutive-linear") return RuleClass::BipermutiveLinear;
    throw Error(Errc::Parse, "unknown rule class '" + std::string(name) + "'");
}

std::vector<LocalRule> enumerate_rules(const FieldSpec& field, std::size_t r, RuleClass cls) {
    constexpr std::uint64_t kMaxRules = 4096;
    if (r < 1) throw Error(Errc::BadParameters, "radius must be at least 1");
    std::vector<LocalRule> rules;
    if (cls == RuleClass::BipermutiveLinear) {
        const auto count = checked_pow(field.q(), 2 * r - 1, kMaxRules, Errc::SearchTooLarge, "too many rules") *
                           (field.q() - 1) * (field.q() - 1);
        if (count > kMaxRules) throw Error(Errc::SearchTooLarge, "too many rules");
        for (const auto& p : poly_enumerate(field, 2 * r, false)) {
            if (p[0].is_zero()) continue;
            rules.push_back(LocalRule::linear(field, p.coeffs()));
        }
        return rules;
    }
    if (field.q() != 2) {
        throw Error(Errc::SearchTooLarge, "bipermutive-all enumeration is implemented for q = 2 only");
    }
    // Over F_2 the bipermutive rules are exactly x_0 + u(x_1..x_{2r-1}) + x_{2r}.
    const std::size_t inner_bits = 2 * r - 1;
    if (inner_bits >= 6) throw Error(Errc::SearchTooLarge, "too many rules");
    const std::uint64_t inner_size = std::uint64_t{1} << inner_bits;
    const std::uint64_t count = std::uint64_t{1} << inner_size;
    if (count > kMaxRules) throw Error(Errc::SearchTooLarge, "too many rules");
    const std::uint64_t size = table_size(2, 2 * r + 1);
    std::vector<std::vector<Element>> tables;
    for (std::uint64_t u = 0; u < count; ++u) {
        std::vector<Element> entries(size);
        for (std::uint64_t w = 0; w < size; ++w) {
            const std::uint64_t x0 = w & 1;
            const std::uint64_t mid = (w >> 1) & (inner_size - 1);
            const std::uint64_t xr = (w >> (2 * r)) & 1;
            entries[w] = Element(static_cast<std::uint32_t>(x0 ^ ((u >> mid) & 1) ^ xr));
        }
        tables.push_back(std::move(entries));
    }
    std::sort(tables.begin(), tables.end());
    for (auto& e : tables) rules.push_back(LocalRule::table(field, r, std::move(e)));
    return rules;
}

std::string rule_identifier(const LocalRule& rule) {
    std::ostringstream os;
    if (rule.is_linear()) {
        os << "linear:" << rule.field().q() << ':';
        const auto& a = rule.coeffs();
        for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i].index();
        return os.str();
    }
    os << "wolfram:" << wolfram_number(rule) << ":r" << rule.radius();
    return os.str();
}

Census search_orthogonal_pairs(const FieldSpec& field, std::size_t r, std::size_t m, RuleClass cls) {
    const auto rules = enumerate_rules(field, r, cls);
    const auto order = checked_pow(field.q(), m, kMaxSquareOrder, Errc::SearchTooLarge, "square order exceeds 4096");
    const std::uint64_t work = rules.size() * rules.size() / 2 * order * order;
    if (work > (std::uint64_t{1} << 34)) throw Error(Errc::SearchTooLarge, "pair search exceeds the work bound");

    Census census{field, r, m, cls, {}, {}, {}};
    std::vector<LatinSquare> squares;
    squares.reserve(rules.size());
    for (const auto& rule : rules) {
        census.rules.push_back(rule_identifier(rule));
        squares.push_back(square_from_ca(rule, m));
    }
    for (std::size_t i = 0; i < squares.size(); ++i) {
        for (std::size_t j = i + 1; j < squares.size(); ++j) {
            if (are_orthogonal(squares[i], squares[j])) census.pairs.emplace_back(i, j);
        }
    }

    auto& conv = census.conventions;
    conv["unordered_distinct"] = census.pairs.size();
    conv["ordered_distinct"] = 2 * census.pairs.size();

    std::vector<bool> linear(rules.size()), zero_preserving(rules.size());
    for (std::size_t i = 0; i < rules.size(); ++i) {
        linear[i] = linear_form(rules[i]).has_value();
        zero_preserving[i] = rules[i](Configuration(rules[i].window(), field.zero())).is_zero();
    }
    std::uint64_t both_linear = 0, both_zero = 0;
    for (const auto& [i, j] : census.pairs) {
        both_linear += linear[i] && linear[j];
        both_zero += zero_preserving[i] && zero_preserving[j];
    }
    conv["both_linear_unordered"] = both_linear;
    conv["zero_preserving_unordered"] = both_zero;
    conv["zero_preserving_ordered"] = 2 * both_zero;

    if (field.q() == 2 && cls == RuleClass::BipermutiveAll) {
        // Identify {f, g} with {not f, not g}.
        std::map<std::vector<Element>, std::size_t> by_table;
        for (std::size_t i = 0; i < rules.size(); ++i) by_table.emplace(rules[i].entries(), i);
        std::vector<std::size_t> complement(rules.size());
        for (std::size_t i = 0; i < rules.size(); ++i) {
            auto e = rules[i].entries();
            for (auto& x : e) x = Element(x.index() ^ 1);
            complement[i] = by_table.at(e);
        }
        std::set<std::pair<std::size_t, std::size_t>> orbits;
        for (const auto& [i, j] : census.pairs) {
            auto c = std::minmax(complement[i], complement[j]);
            orbits.insert(std::min(std::pair{i, j}, std::pair{c.first, c.second}));
        }
        conv["unordered_modulo_complement"] = orbits.size();
    }
    return census;
}

std::uint64_t count_coprime_pairs(const FieldSpec& field, std::size_t n, Element a, Element b) {
    if (!field.contains(a) || !field.contains(b)) throw Error(Errc::ElementOutOfRange, "constant outside the field");
    if (a.is_zero() || b.is_zero()) throw Error(Errc::ZeroConstant, "constant terms must be nonzero");
    if (n < 1) throw Error(Errc::DegreeTooSmall, "degree must be at least 1");
    const auto fs = poly_enumerate(field, n, true, a);
    const auto gs = poly_enumerate(field, n, true, b);
    if (fs.size() * gs.size() > (std::uint64_t{1} << 24)) throw Error(Errc::SearchTooLarge, "too many pairs");
    std::uint64_t count = 0;
    for (const auto& f : fs) {
        for (const auto& g : gs) count += poly_coprime(f, g);
    }
    return count;
}

}  // namespace camols
