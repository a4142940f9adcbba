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

#include "camols/io.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <sstream>

namespace camols::io {

namespace {

template <class Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const json::exception& e) {
        throw Error(Errc::Parse, std::string(what) + ": " + e.what());
    }
}

std::uint64_t parse_uint(std::string_view text, const char* what) {
    std::uint64_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc() || ptr != end) {
        throw Error(Errc::Parse, std::string("bad ") + what + " '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::uint32_t> parse_uint_list(std::string_view text, const char* what) {
    std::vector<std::uint32_t> out;
    std::size_t start = 0;
    for (;;) {
        const auto comma = text.find(',', start);
        const auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        const auto v = parse_uint(item, what);
        if (v > 0xffffffffu) throw Error(Errc::Parse, std::string(what) + " out of range");
        out.push_back(static_cast<std::uint32_t>(v));
        if (comma == std::string_view::npos) return out;
        start = comma + 1;
    }
}

json elements_to_json(std::span<const Element> xs) {
    json j = json::array();
    for (auto x : xs) j.push_back(x.index());
    return j;
}

std::vector<Element> elements_from_json(const FieldSpec& field, const json& j) {
    return field.elements(j.get<std::vector<std::uint32_t>>());
}

}  // namespace

json parse(std::string_view document) {
    try {
        return json::parse(document);
    } catch (const json::exception& e) {
        throw Error(Errc::Parse, e.what());
    }
}

json field_to_json(const FieldSpec& field) {
    json j = {{"p", field.p()}, {"alpha", field.alpha()}};
    if (field.alpha() > 1) j["modulus"] = field.modulus();
    return j;
}

FieldSpec field_from_json(const json& j) {
    return guarded("field", [&] {
        std::optional<std::vector<std::uint32_t>> modulus;
        if (j.contains("modulus")) modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
        return FieldSpec(j.at("p").get<std::uint32_t>(), j.at("alpha").get<std::uint32_t>(), modulus);
    });
}

json poly_to_json(const Polynomial& f) { return f.indices(); }

Polynomial poly_from_json(const FieldSpec& field, const json& j) {
    return guarded("polynomial", [&] { return Polynomial(field, elements_from_json(field, j)); });
}

json rule_to_json(const LocalRule& rule) {
    json j = {{"field", field_to_json(rule.field())}, {"radius", rule.radius()}};
    if (rule.is_linear()) {
        j["kind"] = "linear";
        j["coeffs"] = elements_to_json(rule.coeffs());
    } else {
        j["kind"] = "table";
        j["entries"] = elements_to_json(rule.entries());
    }
    return j;
}

LocalRule rule_from_json(const json& j) {
    return guarded("rule", [&] {
        const FieldSpec field = field_from_json(j.at("field"));
        const auto kind = j.at("kind").get<std::string>();
        if (kind == "linear") {
            auto rule = LocalRule::linear(field, elements_from_json(field, j.at("coeffs")));
            if (j.contains("radius") && j.at("radius").get<std::size_t>() != rule.radius()) {
                throw Error(Errc::Parse, "radius disagrees with the coefficient count");
            }
            return rule;
        }
        if (kind == "table") {
            return LocalRule::table(field, j.at("radius").get<std::size_t>(), elements_from_json(field, j.at("entries")));
        }
        throw Error(Errc::Parse, "unknown rule kind '" + kind + "'");
    });
}

LocalRule parse_rule(std::string_view text) {
    const auto first = text.find(':');
    const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
    if (second == std::string_view::npos) {
        throw Error(Errc::Parse, "rule must look like wolfram:<n>:r<radius> or linear:<q>:<c0,c1,...>");
    }
    const auto kind = text.substr(0, first);
    const auto middle = text.substr(first + 1, second - first - 1);
    const auto last = text.substr(second + 1);
    if (kind == "wolfram") {
        if (last.empty() || last.front() != 'r') throw Error(Errc::Parse, "radius must be written r<radius>");
        return rule_from_wolfram(parse_uint(middle, "rule number"), parse_uint(last.substr(1), "radius"));
    }
    if (kind == "linear") {
        const auto q = parse_uint(middle, "field order");
        if (q > kMaxFieldOrder) throw Error(Errc::FieldTooLarge, "field order exceeds 257");
        const FieldSpec field = FieldSpec::of_order(static_cast<std::uint32_t>(q));
        const auto coeffs = parse_uint_list(last, "coefficient");
        return LocalRule::linear(field, field.elements(coeffs));
    }
    throw Error(Errc::Parse, "unknown rule kind '" + std::string(kind) + "'");
}

json square_to_json(const LatinSquare& square) {
    json j = {{"order", square.order()}, {"entries", square.rows()}};
    if (const auto& prov = square.provenance()) {
        j["provenance"] = {{"rule", rule_to_json(prov->rule)}, {"m", prov->m}};
    }
    return j;
}

LatinSquare square_from_json(const json& j) {
    return guarded("square", [&] {
        const auto order = j.at("order").get<std::size_t>();
        const auto rows = j.at("entries").get<Grid>();
        if (rows.size() != order) throw Error(Errc::ShapeMismatch, "row count differs from order");
        std::optional<SquareProvenance> prov;
        if (j.contains("provenance")) {
            prov = SquareProvenance{rule_from_json(j.at("provenance").at("rule")),
                                    j.at("provenance").at("m").get<std::size_t>()};
        }
        return LatinSquare::from_rows(rows, std::move(prov));
    });
}

std::string square_to_text(const LatinSquare& square) {
    std::ostringstream os;
    for (std::size_t i = 0; i < square.order(); ++i) {
        for (std::size_t j = 0; j < square.order(); ++j) os << (j ? " " : "") << square(i, j);
        os << '\n';
    }
    return os.str();
}

LatinSquare square_from_text(std::string_view text) {
    Grid rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<std::uint32_t> row;
        std::string token;
        while (ls >> token) {
            const auto v = parse_uint(token, "square entry");
            if (v > 0xffffffffu) throw Error(Errc::Parse, "square entry out of range");
            row.push_back(static_cast<std::uint32_t>(v));
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw Error(Errc::Parse, "empty square");
    return LatinSquare::from_rows(rows);
}

LatinSquare read_square(std::string_view document) {
    const auto start = document.find_first_not_of(" \t\r\n");
    if (start != std::string_view::npos && document[start] == '{') return square_from_json(parse(document));
    return square_from_text(document);
}

json oa_to_json(const OrthogonalArray& oa) {
    return {{"t", oa.t}, {"v", oa.v}, {"k", oa.k}, {"lambda", oa.lambda}, {"rows", oa.rows}};
}

OrthogonalArray oa_from_json(const json& j) {
    return guarded("orthogonal array", [&] {
        OrthogonalArray oa;
        oa.t = j.at("t").get<std::uint32_t>();
        oa.v = j.at("v").get<std::uint32_t>();
        oa.k = j.at("k").get<std::uint32_t>();
        oa.lambda = j.at("lambda").get<std::uint32_t>();
        oa.rows = j.at("rows").get<Grid>();
        for (const auto& row : oa.rows) {
            if (row.size() != oa.k) throw Error(Errc::ShapeMismatch, "row length differs from k");
        }
        return oa;
    });
}

json census_to_json(const Census& census) {
    json pairs = json::array();
    for (const auto& [i, j] : census.pairs) pairs.push_back({census.rules[i], census.rules[j]});
    return {{"field", field_to_json(census.field)},
            {"r", census.r},
            {"m", census.m},
            {"class", rule_class_name(census.cls)},
            {"rule_count", census.rules.size()},
            {"pair_count", census.pair_count()},
            {"pair_convention", "unordered_distinct"},
            {"conventions", census.conventions},
            {"rules", census.rules},
            {"pairs", pairs}};
}

json descriptor_to_json(const SchemeDescriptor& d) {
    json polys = json::array();
    for (const auto& f : d.polys()) polys.push_back(poly_to_json(f));
    json j = {{"field", field_to_json(d.field())}, {"r", d.r()}, {"t", d.t()}, {"n", d.n()}, {"polys", polys}};
    if (d.seed()) j["seed"] = *d.seed();
    return j;
}

SchemeDescriptor descriptor_from_json(const json& j) {
    return guarded("descriptor", [&] {
        const FieldSpec field = field_from_json(j.at("field"));
        std::vector<Polynomial> polys;
        for (const auto& p : j.at("polys")) polys.push_back(poly_from_json(field, p));
        if (j.contains("n") && j.at("n").get<std::size_t>() != polys.size()) {
            throw Error(Errc::Parse, "n disagrees with the number of polynomials");
        }
        std::optional<std::uint64_t> seed;
        if (j.contains("seed")) seed = j.at("seed").get<std::uint64_t>();
        return SchemeDescriptor(field, j.at("r").get<std::size_t>(), j.at("t").get<std::size_t>(), std::move(polys),
                                seed);
    });
}

std::string descriptor_hash(const SchemeDescriptor& d) {
    const std::string canonical = descriptor_to_json(d).dump();
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(canonical.data(), canonical.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
        throw Error(Errc::Parse, "SHA-256 failed");
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string hex;
    hex.reserve(2 * length);
    for (unsigned int i = 0; i < length; ++i) {
        hex.push_back(kHex[digest[i] >> 4]);
        hex.push_back(kHex[digest[i] & 0xf]);
    }
    return hex;
}

json share_to_json(const Share& s, const SchemeDescriptor& d) {
    return {{"player", s.player}, {"value", elements_to_json(s.value)}, {"descriptor_hash", descriptor_hash(d)}};
}

Share share_from_json(const json& j, const SchemeDescriptor& d) {
    return guarded("share", [&] {
        if (j.at("descriptor_hash").get<std::string>() != descriptor_hash(d)) {
            throw Error(Errc::HashMismatch, "share was issued under a different descriptor");
        }
        Share s;
        s.player = j.at("player").get<std::size_t>();
        s.value = elements_from_json(d.field(), j.at("value"));
        return s;
    });
}

}  // namespace camols::io
