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

#include "camols/sss.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <string>

#include "camols/linalg.hpp"

namespace camols {

namespace {

// Exact rejection sampling; unlike std::uniform_int_distribution the result is
// the same on every standard library.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = kMax - kMax % bound;
    for (;;) {
        const std::uint64_t x = rng();
        if (x < limit) return x % bound;
    }
}

bool coprime_with_all(const Polynomial& f, const std::vector<Polynomial>& chosen) {
    return std::all_of(chosen.begin(), chosen.end(), [&](const Polynomial& g) { return poly_coprime(f, g); });
}

std::vector<Element> concat(std::span<const Element> a, std::span<const Element> b) {
    std::vector<Element> out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

constexpr std::uint64_t kMaxPool = std::uint64_t{1} << 16;
constexpr std::uint64_t kMaxAudit = std::uint64_t{1} << 20;

}  // namespace

SchemeDescriptor::SchemeDescriptor(FieldSpec field, std::size_t r, std::size_t t, std::vector<Polynomial> polys,
                                   std::optional<std::uint64_t> seed)
    : field_(std::move(field)), r_(r), t_(t), polys_(std::move(polys)), seed_(seed) {
    if (r_ < 1 || t_ < 1) throw Error(Errc::BadParameters, "r and t must be at least 1");
    if (polys_.size() < 2) throw Error(Errc::BadParameters, "a scheme needs at least two players");
    for (const auto& f : polys_) {
        if (!(f.field() == field_)) throw Error(Errc::FieldMismatch, "polynomial over a different field");
        if (f.degree() != static_cast<int>(2 * r_)) {
            throw Error(Errc::BadParameters, "every polynomial must have degree 2r=" + std::to_string(2 * r_));
        }
        if (f[0].is_zero()) throw Error(Errc::BadParameters, "every polynomial needs a nonzero constant term");
    }
    for (std::size_t i = 0; i < polys_.size(); ++i) {
        for (std::size_t j = i + 1; j < polys_.size(); ++j) {
            if (!poly_coprime(polys_[i], polys_[j])) {
                throw Error(Errc::NotCoprime, "polynomials of players " + std::to_string(i + 1) + " and " +
                                                  std::to_string(j + 1) + " share a factor");
            }
        }
    }
    rules_.reserve(polys_.size());
    for (const auto& f : polys_) rules_.push_back(LocalRule::linear(field_, f.coeffs()));
}

PolySource parse_poly_source(std::string_view name) {
    if (name == "irreducible") return PolySource::Irreducible;
    if (name == "coprime-set") return PolySource::CoprimeSet;
    throw Error(Errc::Parse, "unknown polynomial source '" + std::string(name) + "'");
}

SchemeDescriptor setup(const FieldSpec& field, std::size_t r, std::size_t t, std::size_t n, PolySource source,
                       std::uint64_t seed) {
    if (r < 1 || t < 1 || n < 2) throw Error(Errc::BadParameters, "need r >= 1, t >= 1 and n >= 2");
    std::mt19937_64 rng(seed);
    const std::size_t degree = 2 * r;
    std::vector<Polynomial> chosen;

    if (source == PolySource::Irreducible) {
        std::vector<Polynomial> pool;
        for (auto& f : poly_enumerate(field, degree, true)) {
            if (poly_is_irreducible(f)) pool.push_back(std::move(f));
        }
        if (pool.size() < n) {
            throw Error(Errc::NotEnoughPolynomials, "only " + std::to_string(pool.size()) +
                                                        " monic irreducible polynomials of degree " +
                                                        std::to_string(degree));
        }
        for (std::size_t i = 0; i < n; ++i) {
            const auto k = i + uniform_below(rng, pool.size() - i);
            std::swap(pool[i], pool[k]);
            chosen.push_back(pool[i]);
        }
        return SchemeDescriptor(field, r, t, std::move(chosen), seed);
    }

    const std::uint64_t q = field.q();
    std::uint64_t pool_size = (q - 1) * (q - 1);
    for (std::size_t i = 1; i < degree && pool_size <= kMaxPool; ++i) pool_size *= q;

    if (pool_size <= kMaxPool) {
        std::vector<Polynomial> pool;
        for (auto& f : poly_enumerate(field, degree, false)) {
            if (!f[0].is_zero()) pool.push_back(std::move(f));
        }
        while (chosen.size() < n && !pool.empty()) {
            const auto k = uniform_below(rng, pool.size());
            std::swap(pool[k], pool.back());
            Polynomial f = std::move(pool.back());
            pool.pop_back();
            if (coprime_with_all(f, chosen)) chosen.push_back(std::move(f));
        }
    } else {
        constexpr std::size_t kMaxAttempts = 100000;
        for (std::size_t attempt = 0; attempt < kMaxAttempts && chosen.size() < n; ++attempt) {
            std::vector<Element> coeffs(degree + 1);
            coeffs.front() = Element(static_cast<std::uint32_t>(1 + uniform_below(rng, q - 1)));
            coeffs.back() = Element(static_cast<std::uint32_t>(1 + uniform_below(rng, q - 1)));
            for (std::size_t i = 1; i < degree; ++i) coeffs[i] = Element(static_cast<std::uint32_t>(uniform_below(rng, q)));
            Polynomial f(field, std::move(coeffs));
            if (coprime_with_all(f, chosen)) chosen.push_back(std::move(f));
        }
    }
    if (chosen.size() < n) {
        throw Error(Errc::NotEnoughPolynomials,
                    "found only " + std::to_string(chosen.size()) + " pairwise coprime polynomials");
    }
    return SchemeDescriptor(field, r, t, std::move(chosen), seed);
}

SecretInput make_input(const SchemeDescriptor& d, std::vector<Element> secret, std::uint64_t seed) {
    if (secret.size() != d.m()) {
        throw Error(Errc::LengthMismatch, "secret must have length m=" + std::to_string(d.m()));
    }
    for (auto x : secret) {
        if (!d.field().contains(x)) throw Error(Errc::ElementOutOfRange, "secret symbol outside the field");
    }
    std::mt19937_64 rng(seed);
    std::vector<Element> randomness(d.m());
    for (auto& x : randomness) x = Element(static_cast<std::uint32_t>(uniform_below(rng, d.field().q())));
    return {std::move(secret), std::move(randomness)};
}

std::vector<Share> share(const SchemeDescriptor& d, const SecretInput& input) {
    const std::size_t m = d.m();
    if (input.secret.size() != m || input.randomness.size() != m) {
        throw Error(Errc::LengthMismatch, "secret and randomness must both have length m=" + std::to_string(m));
    }
    const auto c = concat(input.secret, input.randomness);
    std::vector<Share> shares;
    shares.reserve(d.n());
    for (std::size_t i = 0; i < d.n(); ++i) {
        shares.push_back({i + 1, ca_apply(CaSpec(d.rules()[i], 2 * m, d.t()), c)});
    }
    return shares;
}

std::vector<Element> recover_configuration(const SchemeDescriptor& d, const Share& a, const Share& b) {
    if (a.player == b.player) throw Error(Errc::SamePlayer, "two shares of the same player");
    for (const auto* s : {&a, &b}) {
        if (s->player < 1 || s->player > d.n()) {
            throw Error(Errc::IndexOutOfRange, "player " + std::to_string(s->player) + " not in the scheme");
        }
        if (s->value.size() != d.m()) throw Error(Errc::LengthMismatch, "share length differs from m");
        for (auto x : s->value) {
            if (!d.field().contains(x)) throw Error(Errc::ElementOutOfRange, "share symbol outside the field");
        }
    }
    const auto pa = poly_pow(d.polys()[a.player - 1], d.t());
    const auto pb = poly_pow(d.polys()[b.player - 1], d.t());
    const Matrix inverse = invert(sylvester_matrix(pa, pb));
    return mat_vec(inverse, concat(a.value, b.value));
}

std::vector<Element> recover(const SchemeDescriptor& d, const Share& a, const Share& b) {
    auto c = recover_configuration(d, a, b);
    c.resize(d.m());
    return c;
}

OrthogonalArray scheme_array(const SchemeDescriptor& d) {
    return oa_from_mols(mols_from_polynomials(d.polys(), d.t()));
}

OaShares oa_share(const OrthogonalArray& oa, std::uint32_t secret, std::uint64_t seed) {
    if (secret < 1 || secret > oa.v) {
        throw Error(Errc::SecretOutOfRange, "secret " + std::to_string(secret) + " not in 1.." + std::to_string(oa.v));
    }
    std::vector<std::size_t> matching;
    for (std::size_t i = 0; i < oa.rows.size(); ++i) {
        if (!oa.rows[i].empty() && oa.rows[i].back() == secret) matching.push_back(i);
    }
    if (matching.empty()) throw Error(Errc::NoMatchingRow, "no row ends in the secret");
    std::mt19937_64 rng(seed);
    const std::size_t row = matching[uniform_below(rng, matching.size())];
    OaShares out;
    out.row = row;
    out.shares.assign(oa.rows[row].begin(), oa.rows[row].end() - 1);
    return out;
}

std::uint32_t oa_recover(const OrthogonalArray& oa, std::pair<std::size_t, std::size_t> positions,
                         std::pair<std::uint32_t, std::uint32_t> values) {
    const auto [p1, p2] = positions;
    if (p1 == p2) throw Error(Errc::DuplicatePositions, "share positions must differ");
    if (p1 < 1 || p2 < 1 || p1 >= oa.k || p2 >= oa.k) {
        throw Error(Errc::IndexOutOfRange, "share positions must lie in 1..k-1");
    }
    std::optional<std::uint32_t> secret;
    for (const auto& row : oa.rows) {
        if (row[p1 - 1] == values.first && row[p2 - 1] == values.second) {
            if (secret) throw Error(Errc::AmbiguousRow, "several rows match the shares");
            secret = row.back();
        }
    }
    if (!secret) throw Error(Errc::NoRow, "no row matches the shares");
    return *secret;
}

AuditReport audit_rules(const FieldSpec& field, std::size_t m, std::size_t t, std::span<const LocalRule> rules) {
    const std::uint64_t q = field.q();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < 2 * m; ++i) {
        total *= q;
        if (total > kMaxAudit) throw Error(Errc::AuditTooLarge, "q^(2m) exceeds 2^20 configurations");
    }
    const Encoding enc(field, m);
    const std::uint64_t blocks = enc.order();
    std::vector<CaSpec> specs;
    for (const auto& rule : rules) specs.emplace_back(rule, 2 * m, t);

    // counts[player][(share - 1) * blocks + (secret - 1)]
    std::vector<std::vector<std::uint32_t>> counts(rules.size(), std::vector<std::uint32_t>(blocks * blocks, 0));
    Configuration c(2 * m);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t rest = code;
        for (auto& cell : c) {
            cell = Element(static_cast<std::uint32_t>(rest % q));
            rest /= q;
        }
        const std::uint64_t secret = enc.encode(std::span<const Element>(c).first(m));
        for (std::size_t p = 0; p < specs.size(); ++p) {
            const std::uint64_t b = enc.encode(ca_apply(specs[p], c));
            ++counts[p][(b - 1) * blocks + (secret - 1)];
        }
    }

    AuditReport report;
    report.configurations = total;
    for (std::size_t p = 0; p < specs.size(); ++p) {
        for (std::uint64_t b = 0; b < blocks; ++b) {
            std::uint64_t row_total = 0;
            for (std::uint64_t s = 0; s < blocks; ++s) row_total += counts[p][b * blocks + s];
            if (row_total == 0) continue;
            const std::uint64_t expected = row_total / blocks;
            for (std::uint64_t s = 0; s < blocks; ++s) {
                const std::uint64_t count = counts[p][b * blocks + s];
                if (count * blocks != row_total) {
                    report.uniform = false;
                    report.violations.push_back({p + 1, b + 1, s + 1, count, expected});
                }
            }
        }
    }
    return report;
}

AuditReport security_audit(const SchemeDescriptor& d) { return audit_rules(d.field(), d.m(), d.t(), d.rules()); }

}  // namespace camols
