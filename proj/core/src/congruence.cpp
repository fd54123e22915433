#include "qdissect/congruence.hpp"

namespace qdissect {

namespace {

mpz_class residue(const TruncatedSeries& s, std::size_t index, std::uint64_t m) {
    mpz_class r;
    mpz_class mm(static_cast<unsigned long>(m));
    mpz_class c = s.coefficient(index);
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), mm.get_mpz_t());
    return r;
}

TheoremCatalog make_catalog() {
    TheoremCatalog cat;

    cat.families.push_back({"tower_4n3_mod4", 4, 3, 2, 4, ProofStatus::Proved,
                            "infinite family lifted from 4n+3 by doubling", ""});
    cat.families.push_back({"tower_8n7_mod8", 8, 7, 2, 8, ProofStatus::Proved,
                            "infinite family lifted from 8n+7 by doubling", ""});
    cat.families.push_back({"tower_6n5_mod4", 6, 5, 4, 4, ProofStatus::Proved,
                            "infinite family lifted from 6n+5 by the internal "
                            "congruence mod 4",
                            ""});

    cat.families.push_back({"single_4n3_mod4", 4, 3, 1, 4, ProofStatus::Proved,
                            "odd 2-dissection component is f6^2 mod 4",
                            "tower_4n3_mod4"});
    cat.families.push_back({"single_6n3_mod4", 6, 3, 1, 4, ProofStatus::Proved,
                            "odd 2-dissection component is f6^2 mod 4", ""});
    cat.families.push_back({"single_6n5_mod4", 6, 5, 1, 4, ProofStatus::Proved,
                            "odd 2-dissection component is f6^2 mod 4",
                            "tower_6n5_mod4"});
    cat.families.push_back({"single_8n6_mod4", 8, 6, 1, 4, ProofStatus::Proved,
                            "4n+2 component is 2*f2^3*f6 mod 4, an even function",
                            "tower_4n3_mod4"});
    cat.families.push_back({"single_16n12_mod4", 16, 12, 1, 4,
                            ProofStatus::Proved,
                            "8n+4 component is f6^2 mod 4, an even function",
                            "tower_4n3_mod4"});
    cat.families.push_back({"single_24n20_mod4", 24, 20, 1, 4,
                            ProofStatus::Proved,
                            "24n+20 = 4*(6n+5); conjectured by Herden et al.",
                            "tower_6n5_mod4"});
    cat.families.push_back({"single_32n24_mod4", 32, 24, 1, 4,
                            ProofStatus::Proved,
                            "32n+24 = 8*(4n+3); conjectured by Herden et al.",
                            "tower_4n3_mod4"});
    cat.families.push_back({"single_48n26_mod4", 48, 26, 1, 4,
                            ProofStatus::Proved,
                            "16n+10 component is 2*f3*f6^2 mod 4, a function "
                            "of q^3; conjectured by Herden et al.",
                            ""});

    cat.families.push_back({"single_8n7_mod8", 8, 7, 1, 8, ProofStatus::Proved,
                            "4n+3 component is an even function times 4 mod 8",
                            "tower_8n7_mod8"});
    cat.families.push_back({"single_16n14_mod8", 16, 14, 1, 8,
                            ProofStatus::Proved,
                            "8n+6 component is 4*f2^11*f6^2/f4^4 mod 8",
                            "tower_8n7_mod8"});
    cat.families.push_back({"single_32n28_mod8", 32, 28, 1, 8,
                            ProofStatus::Proved,
                            "32n+28 component cancels to 0 mod 8",
                            "tower_8n7_mod8"});
    cat.families.push_back({"single_64n56_mod8", 64, 56, 1, 8,
                            ProofStatus::Proved,
                            "32n+24 component is an even function times 4 mod 8",
                            "tower_8n7_mod8"});

    // The one statement with numeric evidence only.
    cat.families.push_back({"conj_25n5_mod4", 25, 5, 1, 4,
                            ProofStatus::Conjectural,
                            "conjectured by Herden et al.", ""});

    cat.internals.push_back({"internal_4n_n_mod4", 4, 1, 4,
                             "both sides share the (f2^3/f6)^2 + q*f12^2 form "
                             "mod 4"});
    cat.internals.push_back({"internal_16n_4n_mod8", 16, 4, 8,
                             "both sides share the (f4/(f1*f3))^4 + "
                             "q*(f12/f6)^4 form mod 8"});
    return cat;
}

} // namespace

VerificationReport verify_progression(const TruncatedSeries& s, std::uint64_t A,
                                      std::uint64_t B, std::uint64_t m,
                                      std::size_t n_max) {
    if (A == 0) throw std::invalid_argument("progression step must be positive");
    const std::uint64_t top = A * static_cast<std::uint64_t>(n_max) + B;
    if (top >= s.order()) {
        throw InsufficientTruncationError(
            "insufficient truncation: index " + std::to_string(top) +
            " requires order > " + std::to_string(top) + ", have " +
            std::to_string(s.order()));
    }
    VerificationReport report;
    report.name = std::to_string(A) + "n+" + std::to_string(B) + " mod " +
                  std::to_string(m);
    report.verified_bound = n_max;
    for (std::size_t n = 0; n <= n_max; ++n) {
        mpz_class r = residue(s, A * n + B, m);
        if (r != 0) {
            report.outcome = Outcome::Fail;
            report.witness = Witness{static_cast<std::size_t>(A * n + B),
                                     s.coefficient(A * n + B), 0};
            report.detail = "n = " + std::to_string(n);
            return report;
        }
    }
    report.outcome = Outcome::Pass;
    return report;
}

SweepReport verify_family(const TruncatedSeries& s, const CongruenceFamily& fam,
                          unsigned alpha_max, std::size_t budget) {
    SweepReport report;
    report.name = fam.name;
    report.conjectural = fam.status == ProofStatus::Conjectural;
    const std::uint64_t limit = std::min<std::uint64_t>(budget, s.order());
    const unsigned levels = fam.scale_base == 1 ? 0 : alpha_max;

    std::uint64_t scale = 1;
    for (unsigned alpha = 0; alpha <= levels; ++alpha) {
        AlphaSweep level;
        level.alpha = alpha;
        level.outcome = Outcome::Pass;
        for (std::uint64_t n = 0;; ++n) {
            std::uint64_t base = fam.progression_step * n + fam.progression_offset;
            std::uint64_t index = scale * base;
            if (index >= limit) break;
            ++level.instances;
            mpz_class r = residue(s, index, fam.modulus);
            if (r != 0) {
                level.outcome = Outcome::Fail;
                level.witness = Witness{static_cast<std::size_t>(index),
                                        s.coefficient(index), 0};
                break;
            }
        }
        if (level.instances == 0) level.outcome = Outcome::Uncovered;
        report.levels.push_back(std::move(level));
        if (alpha < levels) {
            if (scale > limit / fam.scale_base) {
                scale = limit + 1; // every remaining level is uncovered
            } else {
                scale *= fam.scale_base;
            }
        }
    }
    return report;
}

VerificationReport verify_internal(const TruncatedSeries& s,
                                   const InternalCongruence& ic,
                                   std::size_t n_max) {
    const std::uint64_t top = ic.outer * static_cast<std::uint64_t>(n_max);
    if (top >= s.order()) {
        throw InsufficientTruncationError(
            "insufficient truncation: index " + std::to_string(top) +
            " requires order > " + std::to_string(top) + ", have " +
            std::to_string(s.order()));
    }
    VerificationReport report;
    report.name = ic.name;
    report.verified_bound = n_max;
    for (std::size_t n = 0; n <= n_max; ++n) {
        mpz_class a = residue(s, ic.outer * n, ic.modulus);
        mpz_class b = residue(s, ic.inner * n, ic.modulus);
        if (a != b) {
            report.outcome = Outcome::Fail;
            report.witness = Witness{n, s.coefficient(ic.outer * n),
                                     s.coefficient(ic.inner * n)};
            report.detail = "indices " + std::to_string(ic.outer * n) + " vs " +
                            std::to_string(ic.inner * n);
            return report;
        }
    }
    report.outcome = Outcome::Pass;
    return report;
}

const TheoremCatalog& theorem_catalog() {
    static const TheoremCatalog catalog = make_catalog();
    return catalog;
}

} // namespace qdissect
