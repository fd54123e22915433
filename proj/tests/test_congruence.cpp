#include <doctest.h>

#include <random>
#include <set>

#include "qdissect/congruence.hpp"
#include "qdissect/designated.hpp"

using namespace qdissect;

namespace {

const CoefficientRing kZ = CoefficientRing::integers();

const TruncatedSeries& pd2_4000_mod8() {
    static const TruncatedSeries s =
        pd2_eta_series(4000, CoefficientRing::integers_mod(8));
    return s;
}

const TruncatedSeries& pd2_4000_exact() {
    static const TruncatedSeries s = pd2_eta_series(4000, kZ);
    return s;
}

} // namespace

TEST_CASE("verify_progression pass and fail") {
    const auto& s = pd2_4000_mod8();
    auto pass = verify_progression(s, 4, 3, 4, 900);
    CHECK(pass.outcome == Outcome::Pass);
    CHECK(pass.verified_bound == 900);

    // the same progression does not vanish mod 8: PD2(3) = 4
    auto fail = verify_progression(s, 4, 3, 8, 900);
    CHECK(fail.outcome == Outcome::Fail);
    REQUIRE(fail.witness.has_value());
    CHECK(fail.witness->index == 3);
    CHECK(fail.witness->lhs == 4);

    CHECK_THROWS_AS(verify_progression(s, 0, 1, 4, 10), std::invalid_argument);
}

TEST_CASE("insufficient truncation is an error, not a pass") {
    auto tiny = pd2_eta_series(10, kZ);
    CHECK_THROWS_AS(verify_progression(tiny, 4, 3, 4, 5),
                    InsufficientTruncationError);
    InternalCongruence ic{"t", 4, 1, 4, ""};
    CHECK_THROWS_AS(verify_internal(tiny, ic, 5), InsufficientTruncationError);
}

TEST_CASE("verify_family sweeps alpha levels") {
    const auto& s = pd2_4000_mod8();
    CongruenceFamily fam{"tower_4n3_mod4", 4, 3, 2, 4, ProofStatus::Proved, "", ""};
    auto report = verify_family(s, fam, 5, 4000);
    REQUIRE(report.levels.size() == 6);
    CHECK(report.overall() == Outcome::Pass);
    for (const auto& level : report.levels) {
        CHECK(level.outcome == Outcome::Pass);
        CHECK(level.instances > 0);
        // level alpha covers indices 2^alpha * (4n+3) < 4000
        std::size_t expected = 0;
        std::uint64_t scale = 1ull << level.alpha;
        while (scale * (4 * expected + 3) < 4000) ++expected;
        CHECK(level.instances == expected);
    }
}

TEST_CASE("verify_family reports empty levels as uncovered") {
    auto s = pd2_eta_series(20, CoefficientRing::integers_mod(4));
    CongruenceFamily fam{"t", 4, 3, 2, 4, ProofStatus::Proved, "", ""};
    auto report = verify_family(s, fam, 4, 20);
    REQUIRE(report.levels.size() == 5);
    // 2^3 * 3 = 24 >= 20: alpha 3 and 4 have no instances
    CHECK(report.levels[0].outcome == Outcome::Pass);
    CHECK(report.levels[3].outcome == Outcome::Uncovered);
    CHECK(report.levels[3].instances == 0);
    CHECK(report.levels[4].outcome == Outcome::Uncovered);
    CHECK(report.overall() == Outcome::Uncovered);
}

TEST_CASE("verify_family surfaces counterexamples") {
    const auto& s = pd2_4000_mod8();
    // over-strengthened: 4n+3 is not always 0 mod 8 (only 8n+7 is)
    CongruenceFamily wrong{"w", 4, 3, 2, 8, ProofStatus::Proved, "", ""};
    auto report = verify_family(s, wrong, 2, 4000);
    CHECK(report.overall() == Outcome::Fail);
    REQUIRE(report.levels[0].witness.has_value());
    CHECK(report.levels[0].witness->index == 3);
}

TEST_CASE("verify_internal pass and fail") {
    const auto& s = pd2_4000_mod8();
    InternalCongruence good{"internal_4n_n_mod4", 4, 1, 4, ""};
    auto pass = verify_internal(s, good, 900);
    CHECK(pass.outcome == Outcome::Pass);

    // PD2(2n) == PD2(n) mod 4 is false: PD2(2) = 2, PD2(1) = 1
    InternalCongruence bad{"bogus", 2, 1, 4, ""};
    auto fail = verify_internal(s, bad, 900);
    CHECK(fail.outcome == Outcome::Fail);
    REQUIRE(fail.witness.has_value());
    CHECK(fail.witness->index == 1); // witness records n, detail the indices
    CHECK(fail.witness->lhs == 2);
    CHECK(fail.witness->rhs == 1);
}

TEST_CASE("catalog shape") {
    const auto& cat = theorem_catalog();
    std::set<std::string> names;
    unsigned conjectural = 0, towers = 0, singles = 0;
    for (const auto& f : cat.families) {
        CHECK(!f.name.empty());
        CHECK(!f.source.empty());
        names.insert(f.name);
        if (f.status == ProofStatus::Conjectural) ++conjectural;
        if (f.scale_base > 1) ++towers;
        if (f.scale_base == 1) ++singles;
        if (!f.instance_of.empty()) {
            // the parent family must exist and be a tower
            bool found = false;
            for (const auto& g : cat.families) {
                if (g.name == f.instance_of) {
                    found = true;
                    CHECK(g.scale_base > 1);
                }
            }
            CHECK(found);
        }
    }
    for (const auto& ic : cat.internals) names.insert(ic.name);
    CHECK(names.size() == cat.families.size() + cat.internals.size());
    CHECK(conjectural == 1);
    CHECK(towers == 3);
    CHECK(singles >= 6);
    CHECK(cat.internals.size() == 2);
}

TEST_CASE("every proved catalog entry passes a 4000-coefficient sweep") {
    const auto& cat = theorem_catalog();
    for (const auto& fam : cat.families) {
        std::uint64_t lcm_ok = fam.modulus == 4 || fam.modulus == 8;
        REQUIRE(lcm_ok); // mod 8 series covers both via reduce
        auto s = fam.modulus == 8 ? pd2_4000_mod8()
                                  : reduce_mod(pd2_4000_mod8(), 4);
        auto report = verify_family(s, fam, 4, 4000);
        INFO("family ", fam.name);
        CHECK(report.overall() != Outcome::Fail);
        CHECK(report.levels[0].outcome == Outcome::Pass);
    }
    for (const auto& ic : cat.internals) {
        auto s = ic.modulus == 8 ? pd2_4000_mod8()
                                 : reduce_mod(pd2_4000_mod8(), 4);
        std::size_t n_max = 3999 / ic.outer;
        auto report = verify_internal(s, ic, n_max);
        INFO("internal ", ic.name);
        CHECK(report.outcome == Outcome::Pass);
    }
}

TEST_CASE("modular sweep agrees with exact arithmetic on random spot checks") {
    const auto& exact = pd2_4000_exact();
    const auto& modular = pd2_4000_mod8();
    std::mt19937 rng(57);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = rng() % 4000;
        mpz_class r = exact.coefficient(n) % 8;
        if (r < 0) r += 8;
        CHECK(modular.coefficient(n) == r);
    }
}

TEST_CASE("witnesses are sound: re-checkable against coefficient()") {
    const auto& s = pd2_4000_mod8();
    CongruenceFamily wrong{"w", 2, 1, 1, 8, ProofStatus::Proved, "", ""};
    auto report = verify_family(s, wrong, 0, 4000);
    REQUIRE(report.levels[0].witness.has_value());
    const auto& w = *report.levels[0].witness;
    CHECK(s.coefficient(w.index) == w.lhs);
    CHECK(w.lhs % 8 != 0);
    // and against the fully independent combinatorial count
    mpz_class truth = enumerate_pd(static_cast<unsigned>(w.index),
                                   PartRestriction::k_regular(2));
    CHECK(truth % 8 == w.lhs);
}
