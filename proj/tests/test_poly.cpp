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

#include <random>
#include <vector>

#include "camols/linalg.hpp"
#include "camols/poly.hpp"
#include "oracles.hpp"

using namespace camols;

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
const FieldSpec F3(3, 1);

Polynomial P(const FieldSpec& f, std::initializer_list<std::uint32_t> c) { return Polynomial::from_indices(f, c); }

// Every polynomial over a prime field with degree in [lo, hi].
std::vector<Polynomial> all_polys(const FieldSpec& f, int lo, int hi) {
    std::vector<Polynomial> out;
    for (int d = lo; d <= hi; ++d) {
        if (d < 0) {
            out.emplace_back(f);
            continue;
        }
        auto part = poly_enumerate(f, static_cast<std::size_t>(d), false);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

// Sylvester determinant over F_p through cofactor expansion, built from raw coefficients.
long resultant_oracle(const Polynomial& f, const Polynomial& g) {
    const int df = f.degree(), dg = g.degree();
    const std::size_t n = static_cast<std::size_t>(df + dg);
    oracle::IntMatrix m(n, std::vector<long>(n, 0));
    for (int k = 0; k < dg; ++k) {
        for (int i = 0; i <= df; ++i) m[k][k + i] = f[i].index();
    }
    for (int k = 0; k < df; ++k) {
        for (int i = 0; i <= dg; ++i) m[dg + k][k + i] = g[i].index();
    }
    return oracle::laplace_det(m, f.field().p());
}

bool divides(const Polynomial& d, const Polynomial& f) { return poly_divmod(f, d).second.is_zero(); }

}  // namespace

TEST(Poly, Normalization) {
    auto f = P(F2, {1, 1, 0, 0});
    EXPECT_EQ(f.degree(), 1);
    EXPECT_EQ(f.indices(), (std::vector<std::uint32_t>{1, 1}));
    EXPECT_TRUE(P(F2, {0, 0}).is_zero());
    EXPECT_EQ(Polynomial(F2).degree(), Polynomial::kZeroDegree);
    EXPECT_EQ(code_of([] { P(F2, {2}); }), Errc::ElementOutOfRange);
}

TEST(Poly, AddExamples) {
    EXPECT_TRUE(poly_add(P(F2, {1, 1}), P(F2, {1, 1})).is_zero());
    EXPECT_EQ(poly_add(P(F2, {1, 1, 1}), P(F2, {1, 0, 1})), P(F2, {0, 1}));
    EXPECT_TRUE(poly_add(P(F3, {1, 2}), P(F3, {2, 1})).is_zero());
    EXPECT_EQ(code_of([] { poly_add(P(F2, {1}), P(F3, {1})); }), Errc::FieldMismatch);
}

TEST(Poly, MulExamples) {
    EXPECT_EQ(poly_mul(P(F2, {1, 1}), P(F2, {1, 1})), P(F2, {1, 0, 1}));
    EXPECT_EQ(poly_mul(P(F2, {1, 1, 1}), P(F2, {1, 1})), P(F2, {1, 0, 0, 1}));
    auto f = P(F3, {2, 0, 1, 1});
    EXPECT_EQ(poly_mul(f, P(F3, {1})), f);
    EXPECT_EQ(code_of([] { poly_mul(P(F2, {1}), P(F3, {1})); }), Errc::FieldMismatch);
}

TEST(Poly, PowExamples) {
    EXPECT_EQ(poly_pow(P(F2, {1, 1, 1}), 2), P(F2, {1, 0, 1, 0, 1}));
    EXPECT_EQ(poly_pow(P(F2, {1, 0, 1}), 2), P(F2, {1, 0, 0, 0, 1}));
    auto f = P(F3, {1, 2, 0, 1});
    EXPECT_EQ(poly_pow(f, 1), f);
    EXPECT_TRUE(poly_pow(f, 0).is_one());
}

TEST(Poly, GcdExamples) {
    EXPECT_TRUE(poly_gcd(P(F2, {1, 1, 1}), P(F2, {1, 0, 1})).is_one());
    EXPECT_EQ(poly_gcd(P(F2, {1, 0, 1}), P(F2, {1, 1})), P(F2, {1, 1}));
    EXPECT_EQ(poly_gcd(P(F3, {1, 0, 2}), Polynomial(F3)), P(F3, {2, 0, 1}));
    EXPECT_EQ(code_of([] { poly_gcd(Polynomial(F2), Polynomial(F2)); }), Errc::BothZero);
}

TEST(Poly, ResultantExamples) {
    EXPECT_EQ(poly_resultant(P(F2, {1, 1, 1}), P(F2, {1, 0, 1})), Element(1));
    EXPECT_EQ(resultant_oracle(P(F2, {1, 1, 1}), P(F2, {1, 0, 1})), 1);
    EXPECT_EQ(poly_resultant(P(F2, {1, 1}), P(F2, {1, 0, 1})), Element(0));
    EXPECT_EQ(poly_resultant(P(F2, {1, 1, 1}), P(F2, {1, 1, 1})), Element(0));
    EXPECT_EQ(code_of([] { poly_resultant(P(F2, {1}), P(F2, {1, 1})); }), Errc::DegreeTooSmall);
}

TEST(Poly, ResultantMatchesEqualDegreeSylvester) {
    auto f = P(F2, {1, 1, 1}), g = P(F2, {1, 0, 1});
    EXPECT_EQ(poly_resultant(f, g), determinant(sylvester_matrix(f, g)));
}

TEST(Poly, IrreducibleExamples) {
    EXPECT_TRUE(poly_is_irreducible(P(F2, {1, 1, 1})));
    EXPECT_FALSE(poly_is_irreducible(P(F2, {1, 0, 1})));
    EXPECT_TRUE(poly_is_irreducible(P(F2, {1, 1, 1, 1, 1})));
}

TEST(Poly, IrreducibleCountsMatchNecklaceFormula) {
    // Monic irreducibles of degree d over F_2: 2, 1, 2, 3, 6, 9 for d = 1..6.
    const std::vector<std::size_t> expected = {2, 1, 2, 3, 6, 9};
    for (std::size_t d = 1; d <= 6; ++d) {
        std::size_t count = 0;
        for (const auto& f : poly_enumerate(F2, d, true)) count += poly_is_irreducible(f);
        EXPECT_EQ(count, expected[d - 1]) << "degree " << d;
    }
    // Over F_3: 3, 3, 8.
    const std::vector<std::size_t> expected3 = {3, 3, 8};
    for (std::size_t d = 1; d <= 3; ++d) {
        std::size_t count = 0;
        for (const auto& f : poly_enumerate(F3, d, true)) count += poly_is_irreducible(f);
        EXPECT_EQ(count, expected3[d - 1]) << "degree " << d;
    }
}

TEST(Poly, EnumerateExamples) {
    auto two = poly_enumerate(F2, 2, true, Element(1));
    ASSERT_EQ(two.size(), 2u);
    EXPECT_EQ(two[0], P(F2, {1, 0, 1}));
    EXPECT_EQ(two[1], P(F2, {1, 1, 1}));
    auto one = poly_enumerate(F2, 1, true, Element(1));
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0], P(F2, {1, 1}));
    EXPECT_EQ(poly_enumerate(F2, 4, true, Element(1)).size(), 8u);
    EXPECT_EQ(poly_enumerate(F3, 2, false).size(), 18u);
}

TEST(Poly, EnumerateIsLexicographic) {
    auto all = poly_enumerate(F3, 3, false);
    for (std::size_t i = 1; i < all.size(); ++i) {
        EXPECT_LT(all[i - 1].indices(), all[i].indices());
    }
}

TEST(Poly, DivmodIdentity) {
    auto polys = all_polys(F3, -1, 3);
    for (const auto& f : polys) {
        for (const auto& g : polys) {
            if (g.is_zero()) continue;
            auto [quot, rem] = poly_divmod(f, g);
            EXPECT_EQ(poly_add(poly_mul(quot, g), rem), f);
            EXPECT_LT(rem.degree(), g.degree());
        }
    }
}

TEST(Poly, ResultantNonzeroIffCoprimeF2) {
    auto polys = all_polys(F2, 1, 4);
    for (const auto& f : polys) {
        for (const auto& g : polys) {
            const bool coprime = poly_gcd(f, g).degree() == 0;
            const auto res = poly_resultant(f, g);
            EXPECT_EQ(!res.is_zero(), coprime);
            EXPECT_EQ(static_cast<long>(res.index()), resultant_oracle(f, g));
        }
    }
}

TEST(Poly, ResultantNonzeroIffCoprimeF3) {
    auto polys = all_polys(F3, 1, 2);
    for (const auto& f : polys) {
        for (const auto& g : polys) {
            const bool coprime = poly_gcd(f, g).degree() == 0;
            const auto res = poly_resultant(f, g);
            EXPECT_EQ(!res.is_zero(), coprime);
            EXPECT_EQ(static_cast<long>(res.index()), resultant_oracle(f, g));
        }
    }
}

TEST(Poly, GcdIsGreatestCommonDivisor) {
    auto polys = all_polys(F2, -1, 4);
    std::vector<Polynomial> divisors;
    for (std::size_t d = 1; d <= 4; ++d) {
        auto part = poly_enumerate(F2, d, true);
        divisors.insert(divisors.end(), part.begin(), part.end());
    }
    for (const auto& f : polys) {
        for (const auto& g : polys) {
            if (f.is_zero() && g.is_zero()) continue;
            auto d = poly_gcd(f, g);
            EXPECT_TRUE(d.is_monic());
            EXPECT_TRUE(divides(d, f));
            EXPECT_TRUE(divides(d, g));
            for (const auto& c : divisors) {
                if (divides(c, f) && divides(c, g)) { EXPECT_TRUE(divides(c, d)); }
            }
        }
    }
}

TEST(Poly, PowIsAdditiveInExponent) {
    std::mt19937_64 rng(7);
    for (const FieldSpec& f : {F2, F3, FieldSpec(2, 2)}) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<std::uint32_t> c(4);
            for (auto& x : c) x = static_cast<std::uint32_t>(rng() % f.q());
            auto p = Polynomial::from_indices(f, c);
            for (std::uint64_t s = 0; s < 5; ++s) {
                for (std::uint64_t t = 0; t < 5; ++t) {
                    EXPECT_EQ(poly_pow(p, s + t), poly_mul(poly_pow(p, s), poly_pow(p, t)));
                }
            }
        }
    }
}

TEST(Poly, FrobeniusOverPrimeFields) {
    for (const FieldSpec& f : {F2, F3}) {
        for (const auto& p : all_polys(f, 0, 4)) {
            auto fp = poly_pow(p, f.p());
            for (int i = 0; i <= fp.degree(); ++i) {
                if (i % static_cast<int>(f.p()) == 0) {
                    EXPECT_EQ(fp[i], f.pow(p[i / f.p()], f.p()));
                } else {
                    EXPECT_TRUE(fp[i].is_zero());
                }
            }
            EXPECT_EQ(fp.degree(), p.degree() * static_cast<int>(f.p()));
        }
    }
}

TEST(Poly, EvaluateAgreesWithRoots) {
    // 1+X^2 = (1+X)^2 over F_2 has root 1; 1+X+X^2 has none.
    EXPECT_TRUE(P(F2, {1, 0, 1}).evaluate(Element(1)).is_zero());
    EXPECT_FALSE(P(F2, {1, 1, 1}).evaluate(Element(0)).is_zero());
    EXPECT_FALSE(P(F2, {1, 1, 1}).evaluate(Element(1)).is_zero());
}
