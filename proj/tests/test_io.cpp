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

#include <gtest/gtest.h>

#include "camols/io.hpp"

using namespace camols;
using camols::io::json;

namespace {

Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return Errc::Parse;
}

const FieldSpec F2(2, 1);

SchemeDescriptor scheme_150_90() {
    return SchemeDescriptor(F2, 1, 1,
                            {Polynomial::from_indices(F2, {1, 1, 1}), Polynomial::from_indices(F2, {1, 0, 1})});
}

}  // namespace

TEST(Io, FieldDocuments) {
    EXPECT_EQ(io::field_to_json(F2), json::parse(R"({"p":2,"alpha":1})"));
    EXPECT_EQ(io::field_to_json(FieldSpec(2, 2)), json::parse(R"({"p":2,"alpha":2,"modulus":[1,1,1]})"));
    for (auto q : {2u, 3u, 4u, 8u, 9u, 25u}) {
        auto f = FieldSpec::of_order(q);
        EXPECT_EQ(io::field_from_json(io::field_to_json(f)), f);
    }
    EXPECT_EQ(code_of([] { io::field_from_json(json::parse(R"({"p":2})")); }), Errc::Parse);
    EXPECT_EQ(code_of([] { io::field_from_json(json::parse(R"({"p":4,"alpha":1})")); }), Errc::NotPrime);
}

TEST(Io, PolynomialDocuments) {
    auto f = Polynomial::from_indices(F2, {1, 0, 1});
    EXPECT_EQ(io::poly_to_json(f), json::parse("[1,0,1]"));
    EXPECT_EQ(io::poly_from_json(F2, json::parse("[1,0,1,0]")), f);
    EXPECT_EQ(code_of([] { io::poly_from_json(F2, json::parse(R"(["a"])")); }), Errc::Parse);
}

TEST(Io, RuleDocuments) {
    auto lin = rule_from_coeffs(F2, {1, 1, 1});
    EXPECT_EQ(io::rule_to_json(lin),
              json::parse(R"({"field":{"p":2,"alpha":1},"radius":1,"kind":"linear","coeffs":[1,1,1]})"));
    auto back = io::rule_from_json(io::rule_to_json(lin));
    EXPECT_TRUE(back.is_linear());
    EXPECT_EQ(back.coeffs(), lin.coeffs());
    auto tab = rule_from_wolfram(30, 1);
    auto tab_back = io::rule_from_json(io::rule_to_json(tab));
    EXPECT_FALSE(tab_back.is_linear());
    EXPECT_EQ(wolfram_number(tab_back), 30u);
    EXPECT_EQ(code_of([] { io::rule_from_json(json::parse(R"({"field":{"p":2,"alpha":1},"radius":1,"kind":"x"})")); }),
              Errc::Parse);
}

TEST(Io, RuleShorthand) {
    EXPECT_EQ(wolfram_number(io::parse_rule("wolfram:150:r1")), 150u);
    EXPECT_EQ(io::parse_rule("wolfram:4294967295:r2").radius(), 2u);
    auto r = io::parse_rule("linear:3:1,0,2");
    EXPECT_EQ(r.field().q(), 3u);
    EXPECT_EQ(r.coeffs(), FieldSpec(3, 1).elements({1, 0, 2}));
    EXPECT_EQ(io::parse_rule("linear:4:1,2,3").field().q(), 4u);
    EXPECT_EQ(code_of([] { io::parse_rule("wolfram:150"); }), Errc::Parse);
    EXPECT_EQ(code_of([] { io::parse_rule("wolfram:150:1"); }), Errc::Parse);
    EXPECT_EQ(code_of([] { io::parse_rule("wolfram:x:r1"); }), Errc::Parse);
    EXPECT_EQ(code_of([] { io::parse_rule("linear:2:1,,1"); }), Errc::Parse);
    EXPECT_EQ(code_of([] { io::parse_rule("cubic:2:1"); }), Errc::Parse);
    EXPECT_EQ(code_of([] { io::parse_rule("wolfram:256:r1"); }), Errc::NumberOutOfRange);
    EXPECT_EQ(code_of([] { io::parse_rule("linear:6:1,0,1"); }), Errc::NotPrime);
    EXPECT_EQ(code_of([] { io::parse_rule("linear:2:1,1"); }), Errc::EvenWindow);
}

TEST(Io, SquareDocuments) {
    auto sq = square_from_ca(rule_from_wolfram(150, 1), 2);
    auto j = io::square_to_json(sq);
    EXPECT_EQ(j.at("order"), 4);
    EXPECT_EQ(j.at("entries"), json::parse("[[1,4,3,2],[2,3,4,1],[4,1,2,3],[3,2,1,4]]"));
    auto back = io::square_from_json(j);
    EXPECT_EQ(back, sq);
    ASSERT_TRUE(back.provenance().has_value());
    EXPECT_EQ(wolfram_number(back.provenance()->rule), 150u);
    EXPECT_EQ(io::square_to_text(sq), "1 4 3 2\n2 3 4 1\n4 1 2 3\n3 2 1 4\n");
    EXPECT_EQ(io::square_from_text(io::square_to_text(sq)), sq);
    EXPECT_EQ(io::read_square(j.dump()), sq);
    EXPECT_EQ(io::read_square("  1 2\n2 1\n\n"), LatinSquare::from_rows({{1, 2}, {2, 1}}));
}

TEST(Io, SquareErrors) {
    EXPECT_EQ(code_of([] { io::read_square("1 2\n1 2\n"); }), Errc::NotLatin);
    EXPECT_EQ(code_of([] { io::read_square("1 x\n"); }), Errc::Parse);
    EXPECT_EQ(code_of([] { io::read_square(""); }), Errc::Parse);
    EXPECT_EQ(code_of([] { io::read_square("{\"order\": 2,"); }), Errc::Parse);
    EXPECT_EQ(code_of([] { io::read_square(R"({"order":3,"entries":[[1,2],[2,1]]})"); }), Errc::ShapeMismatch);
}

TEST(Io, OaDocuments) {
    std::vector<LatinSquare> sq = {square_from_ca(rule_from_wolfram(150, 1), 2),
                                   square_from_ca(rule_from_wolfram(90, 1), 2)};
    auto oa = oa_from_mols(sq);
    auto j = io::oa_to_json(oa);
    EXPECT_EQ(j.at("t"), 2);
    EXPECT_EQ(j.at("v"), 4);
    EXPECT_EQ(j.at("k"), 4);
    EXPECT_EQ(j.at("lambda"), 1);
    EXPECT_EQ(j.at("rows").size(), 16u);
    EXPECT_EQ(io::oa_from_json(j), oa);
}

TEST(Io, CensusDocument) {
    auto c = search_orthogonal_pairs(F2, 1, 2, RuleClass::BipermutiveLinear);
    auto j = io::census_to_json(c);
    EXPECT_EQ(j.at("rule_count"), 2);
    EXPECT_EQ(j.at("pair_count"), 1);
    EXPECT_EQ(j.at("class"), "bipermutive-linear");
    EXPECT_EQ(j.at("pairs").size(), 1u);
    EXPECT_TRUE(j.at("conventions").contains("unordered_distinct"));
}

TEST(Io, DescriptorDocuments) {
    auto d = scheme_150_90();
    auto j = io::descriptor_to_json(d);
    EXPECT_EQ(j, json::parse(R"({"field":{"p":2,"alpha":1},"r":1,"t":1,"n":2,"polys":[[1,1,1],[1,0,1]]})"));
    EXPECT_EQ(io::descriptor_from_json(j), d);
    auto seeded = setup(FieldSpec(3, 1), 1, 2, 3, PolySource::CoprimeSet, 77);
    EXPECT_EQ(io::descriptor_from_json(io::descriptor_to_json(seeded)), seeded);
    j["n"] = 3;
    EXPECT_EQ(code_of([&] { io::descriptor_from_json(j); }), Errc::Parse);
}

TEST(Io, DescriptorHashIsSha256OfCanonicalDump) {
    // Reference digest of {"field":{"alpha":1,"p":2},"n":2,"polys":[[1,1,1],[1,0,1]],"r":1,"t":1}.
    EXPECT_EQ(io::descriptor_hash(scheme_150_90()), "4191190ed66355415bd8d81c0ee9baac085fd0e1a855dbde08a8b432a3615b52");
}

TEST(Io, ShareDocuments) {
    auto d = scheme_150_90();
    Share s{2, F2.elements({1, 1})};
    auto j = io::share_to_json(s, d);
    EXPECT_EQ(j.at("player"), 2);
    EXPECT_EQ(j.at("descriptor_hash"), io::descriptor_hash(d));
    EXPECT_EQ(io::share_from_json(j, d), s);
    auto other = SchemeDescriptor(F2, 1, 2, d.polys());
    EXPECT_EQ(code_of([&] { io::share_from_json(j, other); }), Errc::HashMismatch);
    j["descriptor_hash"] = std::string(64, '0');
    EXPECT_EQ(code_of([&] { io::share_from_json(j, d); }), Errc::HashMismatch);
    EXPECT_EQ(code_of([&] { io::share_from_json(json::parse("{}"), d); }), Errc::Parse);
}

TEST(Io, ParseErrors) {
    EXPECT_EQ(code_of([] { io::parse("{"); }), Errc::Parse);
    EXPECT_EQ(code_of([] { io::parse("not json"); }), Errc::Parse);
    EXPECT_EQ(io::parse("[1, 2]"), json::parse("[1,2]"));
}
