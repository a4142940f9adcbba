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

#include "camols/ca.hpp"

#include <algorithm>
#include <string>

namespace camols {

namespace {

Configuration decode_window(std::uint64_t index, std::uint32_t q, std::size_t length) {
    Configuration x(length);
    for (auto& cell : x) {
        cell = Element(static_cast<std::uint32_t>(index % q));
        index /= q;
    }
    return x;
}

// Each of the q slots [base + k * stride] holds a distinct value.
bool is_permutation_slice(const std::vector<Element>& entries, std::uint64_t base, std::uint64_t stride, std::uint32_t q) {
    std::vector<bool> seen(q, false);
    for (std::uint32_t k = 0; k < q; ++k) {
        const auto v = entries[base + k * stride].index();
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

}  // namespace

std::uint64_t table_size(std::uint32_t q, std::size_t window) {
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < window; ++i) {
        size *= q;
        if (size > kMaxTableSize) throw Error(Errc::TableTooLarge, "rule table exceeds 2^20 entries");
    }
    return size;
}

LocalRule LocalRule::linear(FieldSpec field, std::vector<Element> coeffs) {
    if (coeffs.size() % 2 == 0 || coeffs.size() < 3) {
        throw Error(Errc::EvenWindow, "a linear rule needs an odd number (>= 3) of coefficients, got " +
                                          std::to_string(coeffs.size()));
    }
    for (auto c : coeffs) {
        if (!field.contains(c)) throw Error(Errc::ElementOutOfRange, "rule coefficient outside the field");
    }
    const std::size_t radius = (coeffs.size() - 1) / 2;
    return LocalRule(std::move(field), radius, Linear{std::move(coeffs)});
}

LocalRule LocalRule::table(FieldSpec field, std::size_t radius, std::vector<Element> entries) {
    if (radius < 1) throw Error(Errc::EvenWindow, "radius must be at least 1");
    if (entries.size() != table_size(field.q(), 2 * radius + 1)) {
        throw Error(Errc::LengthMismatch, "table length must be q^(2r+1)");
    }
    for (auto e : entries) {
        if (!field.contains(e)) throw Error(Errc::ElementOutOfRange, "table entry outside the field");
    }
    return LocalRule(std::move(field), radius, Table{std::move(entries)});
}

const std::vector<Element>& LocalRule::coeffs() const {
    if (const auto* lin = std::get_if<Linear>(&body_)) return lin->coeffs;
    throw Error(Errc::NonlinearRule, "rule is given by a table");
}

std::vector<Element> LocalRule::entries() const {
    if (const auto* tab = std::get_if<Table>(&body_)) return tab->entries;
    const std::uint64_t size = table_size(field_.q(), window());
    std::vector<Element> out(size);
    for (std::uint64_t w = 0; w < size; ++w) out[w] = (*this)(decode_window(w, field_.q(), window()));
    return out;
}

Element LocalRule::operator()(std::span<const Element> x) const {
    if (x.size() != window()) throw Error(Errc::LengthMismatch, "window length must be 2r+1");
    if (const auto* lin = std::get_if<Linear>(&body_)) {
        Element acc = field_.zero();
        for (std::size_t k = 0; k < x.size(); ++k) acc = field_.add(acc, field_.mul(lin->coeffs[k], x[k]));
        return acc;
    }
    const auto& entries = std::get<Table>(body_).entries;
    const std::uint32_t q = field_.q();
    std::uint64_t index = 0;
    for (std::size_t k = x.size(); k-- > 0;) {
        if (!field_.contains(x[k])) throw Error(Errc::ElementOutOfRange, "cell outside the field");
        index = index * q + x[k].index();
    }
    return entries[index];
}

bool LocalRule::same_function(const LocalRule& other) const {
    return field_ == other.field_ && radius_ == other.radius_ && entries() == other.entries();
}

LocalRule rule_from_coeffs(const FieldSpec& field, std::vector<Element> coeffs) {
    return LocalRule::linear(field, std::move(coeffs));
}

LocalRule rule_from_coeffs(const FieldSpec& field, std::initializer_list<std::uint32_t> indices) {
    return LocalRule::linear(field, field.elements(indices));
}

LocalRule rule_from_wolfram(std::uint64_t number, std::size_t radius) {
    if (radius < 1) throw Error(Errc::EvenWindow, "radius must be at least 1");
    const FieldSpec f2(2, 1);
    const std::uint64_t size = table_size(2, 2 * radius + 1);
    if (size < 64 && (number >> size) != 0) {
        throw Error(Errc::NumberOutOfRange,
                    "rule number " + std::to_string(number) + " needs more than " + std::to_string(size) + " bits");
    }
    std::vector<Element> entries(size);
    for (std::uint64_t w = 0; w < size; ++w) entries[w] = Element(w < 64 ? static_cast<std::uint32_t>((number >> w) & 1) : 0);
    return LocalRule::table(f2, radius, std::move(entries));
}

std::uint64_t wolfram_number(const LocalRule& rule) {
    if (rule.field().q() != 2) throw Error(Errc::NumberOutOfRange, "rule numbers exist only for binary rules");
    const auto entries = rule.entries();
    if (entries.size() > 64) throw Error(Errc::NumberOutOfRange, "rule table too large for a 64-bit number");
    std::uint64_t number = 0;
    for (std::size_t w = 0; w < entries.size(); ++w) number |= std::uint64_t{entries[w].index()} << w;
    return number;
}

Polynomial rule_polynomial(const LocalRule& rule) { return Polynomial(rule.field(), rule.coeffs()); }

Permutivity is_bipermutive(const LocalRule& rule) {
    if (rule.is_linear()) {
        const auto& a = rule.coeffs();
        return {!a.front().is_zero(), !a.back().is_zero()};
    }
    const auto entries = rule.entries();
    const std::uint32_t q = rule.field().q();
    const std::uint64_t inner = entries.size() / q;  // q^(2r)
    Permutivity result{true, true};
    for (std::uint64_t rest = 0; rest < inner && (result.leftmost || result.rightmost); ++rest) {
        // rightmost: x_0..x_{2r-1} fixed to `rest`, x_{2r} is the top digit
        if (result.rightmost && !is_permutation_slice(entries, rest, inner, q)) result.rightmost = false;
        // leftmost: x_1..x_{2r} fixed to `rest`, x_0 is the bottom digit
        if (result.leftmost && !is_permutation_slice(entries, rest * q, 1, q)) result.leftmost = false;
    }
    return result;
}

Configuration global_step(const LocalRule& rule, std::span<const Element> x) {
    const std::size_t w = rule.window();
    if (x.size() < w) {
        throw Error(Errc::ConfigTooShort, "configuration of length " + std::to_string(x.size()) +
                                              " is shorter than the window " + std::to_string(w));
    }
    Configuration out(x.size() - w + 1);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = rule(x.subspan(j, w));
    return out;
}

CaSpec::CaSpec(LocalRule rule, std::size_t n, std::size_t t) : rule_(std::move(rule)), n_(n), t_(t) {
    const std::size_t two_r = 2 * rule_.radius();
    if (t_ < 1 || t_ >= n_ / two_r) {
        throw Error(Errc::InvalidAutomaton, "need 1 <= t < floor(n / 2r); got n=" + std::to_string(n_) +
                                                ", r=" + std::to_string(rule_.radius()) + ", t=" + std::to_string(t_));
    }
}

Configuration ca_apply(const CaSpec& spec, std::span<const Element> x) {
    if (x.size() != spec.n()) {
        throw Error(Errc::LengthMismatch,
                    "configuration length " + std::to_string(x.size()) + " differs from n=" + std::to_string(spec.n()));
    }
    Configuration c(x.begin(), x.end());
    for (std::size_t step = 0; step < spec.t(); ++step) c = global_step(spec.rule(), c);
    return c;
}

LocalRule iterated_rule(const LocalRule& rule, std::size_t t) {
    if (t < 1) throw Error(Errc::InvalidAutomaton, "iteration count must be at least 1");
    const Polynomial p = poly_pow(rule_polynomial(rule), t);
    std::vector<Element> coeffs(rule.radius() * t * 2 + 1, rule.field().zero());
    std::copy(p.coeffs().begin(), p.coeffs().end(), coeffs.begin());
    return LocalRule::linear(rule.field(), std::move(coeffs));
}

LocalRule iterated_rule_table(const LocalRule& rule, std::size_t t) {
    if (t < 1) throw Error(Errc::InvalidAutomaton, "iteration count must be at least 1");
    const std::size_t window = 2 * rule.radius() * t + 1;
    const std::uint32_t q = rule.field().q();
    const std::uint64_t size = table_size(q, window);
    std::vector<Element> entries(size);
    for (std::uint64_t w = 0; w < size; ++w) {
        Configuration c = decode_window(w, q, window);
        for (std::size_t step = 0; step < t; ++step) c = global_step(rule, c);
        entries[w] = c.front();
    }
    return LocalRule::table(rule.field(), rule.radius() * t, std::move(entries));
}

}  // namespace camols
