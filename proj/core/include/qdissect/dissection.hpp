#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qdissect/report.hpp"
#include "qdissect/series.hpp"

namespace qdissect {

/// Left-hand side given as residue class j mod m of the coefficients of a
/// parent series, i.e. extract_progression(parent, m, j).
struct DissectRef {
    std::string parent; // expression text
    unsigned m = 1;
    unsigned j = 0;
};

enum class FixtureStatus { ExactIdentity, Congruence };

/// One verifiable identity: every left-hand route (a closed-form expression
/// and/or dissection components) must match the right-hand side, exactly or
/// modulo `modulus`.
struct IdentityFixture {
    std::string name;
    std::optional<std::string> lhs; // closed-form expression, if any
    std::vector<DissectRef> lhs_dissections;
    std::string rhs;
    std::optional<std::uint64_t> modulus; // absent = exact identity
    std::string source;
    bool expect_failure = false; // negative control

    FixtureStatus status() const {
        return modulus ? FixtureStatus::Congruence : FixtureStatus::ExactIdentity;
    }
};

/// Split s into its m residue-class subseries; lossless.
std::vector<TruncatedSeries> dissect(const TruncatedSeries& s, std::size_t m);

/// Expand all routes to `order` coefficients and compare against the right
/// side. Dissection parents are expanded to m*order + j so every route is
/// checked at the same resolution.
VerificationReport verify_fixture(const IdentityFixture& fixture,
                                  std::size_t order);

/// Every displayed identity and congruence-level dissection of the PDO
/// generating function, keyed by stable names (L4, D2_even, M4_4n, ...).
const std::vector<IdentityFixture>& builtin_catalog();

/// Deliberately over-strong statements that must fail with a witness;
/// a verifier that cannot fail is untrustworthy.
const std::vector<IdentityFixture>& negative_controls();

/// Identity-file format: blocks of "key=value" lines (name, lhs, rhs,
/// optional mod, source) separated by blank lines.
std::vector<IdentityFixture> parse_identity_file(std::istream& in);
std::vector<IdentityFixture> load_identity_file(const std::string& path);

} // namespace qdissect
