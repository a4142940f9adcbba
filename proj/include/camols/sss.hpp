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

#ifndef CAMOLS_SSS_HPP
#define CAMOLS_SSS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "camols/ca.hpp"
#include "camols/designs.hpp"
#include "camols/gf.hpp"
#include "camols/poly.hpp"

namespace camols {

/// Public parameters of the (2, n) threshold scheme: n pairwise coprime rule
/// polynomials of degree 2r, each with a nonzero constant term. Secrets and
/// shares live in F_q^m with m = 2rt.
class SchemeDescriptor {
   public:
    SchemeDescriptor(FieldSpec field, std::size_t r, std::size_t t, std::vector<Polynomial> polys,
                     std::optional<std::uint64_t> seed = std::nullopt);

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t r() const noexcept { return r_; }
    std::size_t t() const noexcept { return t_; }
    std::size_t m() const noexcept { return 2 * r_ * t_; }
    std::size_t n() const noexcept { return polys_.size(); }
    const std::vector<Polynomial>& polys() const noexcept { return polys_; }
    const std::vector<LocalRule>& rules() const noexcept { return rules_; }
    /// Seed the descriptor was drawn with, if any; informational only.
    const std::optional<std::uint64_t>& seed() const noexcept { return seed_; }

    friend bool operator==(const SchemeDescriptor& a, const SchemeDescriptor& b) noexcept {
        return a.field_ == b.field_ && a.r_ == b.r_ && a.t_ == b.t_ && a.polys_ == b.polys_ && a.seed_ == b.seed_;
    }

   private:
    FieldSpec field_;
    std::size_t r_;
    std::size_t t_;
    std::vector<Polynomial> polys_;
    std::vector<LocalRule> rules_;
    std::optional<std::uint64_t> seed_;
};

enum class PolySource { Irreducible, CoprimeSet };

PolySource parse_poly_source(std::string_view name);

/// Deterministic in `seed`. Irreducible draws n distinct monic irreducible
/// polynomials of degree 2r; CoprimeSet greedily draws random polynomials with
/// nonzero constant and leading terms, rejecting any that share a factor with
/// those already chosen.
SchemeDescriptor setup(const FieldSpec& field, std::size_t r, std::size_t t, std::size_t n, PolySource source,
                       std::uint64_t seed);

struct SecretInput {
    std::vector<Element> secret;
    std::vector<Element> randomness;
};

/// Pairs `secret` with m uniformly drawn symbols from a generator seeded by `seed`.
SecretInput make_input(const SchemeDescriptor& d, std::vector<Element> secret, std::uint64_t seed);

struct Share {
    std::size_t player = 0;  // 1-based
    std::vector<Element> value;

    friend bool operator==(const Share&, const Share&) = default;
};

/// Share i is the CA <2m, r, t, f_i> applied to S || R.
std::vector<Share> share(const SchemeDescriptor& d, const SecretInput& input);

/// Solves the 2m x 2m Sylvester system of the two iterated rule polynomials
/// for C = S || R.
std::vector<Element> recover_configuration(const SchemeDescriptor& d, const Share& a, const Share& b);

/// The secret part S of recover_configuration.
std::vector<Element> recover(const SchemeDescriptor& d, const Share& a, const Share& b);

/// The scheme as an orthogonal array: columns phi(S), phi(R), phi(B_1), ..., phi(B_n).
OrthogonalArray scheme_array(const SchemeDescriptor& d);

struct OaShares {
    std::size_t row = 0;  // dealer's witness; never handed out
    std::vector<std::uint32_t> shares;
};

/// Threshold scheme over a 2-(v, k, 1) array with the secret in the last
/// column: picks one of the rows ending in `secret` uniformly (seeded) and
/// hands out its first k-1 entries.
OaShares oa_share(const OrthogonalArray& oa, std::uint32_t secret, std::uint64_t seed);

/// Last entry of the unique row having `values` at the 1-based `positions`.
std::uint32_t oa_recover(const OrthogonalArray& oa, std::pair<std::size_t, std::size_t> positions,
                         std::pair<std::uint32_t, std::uint32_t> values);

struct AuditViolation {
    std::size_t player = 0;
    std::uint64_t share = 0;   // phi(B_i)
    std::uint64_t secret = 0;  // phi(S)
    std::uint64_t count = 0;
    std::uint64_t expected = 0;
};

struct AuditReport {
    bool uniform = true;
    std::uint64_t configurations = 0;
    std::vector<AuditViolation> violations;
};

/// Exhaustive single-share leakage check: for every player and every share
/// value b, each secret must be consistent with b for the same number of R.
AuditReport security_audit(const SchemeDescriptor& d);

/// The same audit for arbitrary rules (used to exercise broken descriptors).
AuditReport audit_rules(const FieldSpec& field, std::size_t m, std::size_t t, std::span<const LocalRule> rules);

}  // namespace camols

#endif
