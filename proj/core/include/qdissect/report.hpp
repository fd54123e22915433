#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qdissect {

enum class Outcome { Pass, Fail, Uncovered };

std::string to_string(Outcome o);

/// Concrete counterexample: coefficient index plus both observed values,
/// re-checkable via TruncatedSeries::coefficient().
struct Witness {
    std::size_t index = 0;
    mpz_class lhs;
    mpz_class rhs;
};

struct VerificationReport {
    std::string name;
    std::size_t verified_bound = 0; // order or index range actually covered
    Outcome outcome = Outcome::Fail;
    std::optional<Witness> witness;
    std::string detail;

    bool passed() const { return outcome == Outcome::Pass; }
};

/// One alpha level of a scaled-progression sweep.
struct AlphaSweep {
    unsigned alpha = 0;
    std::size_t instances = 0;
    Outcome outcome = Outcome::Uncovered;
    std::optional<Witness> witness;
};

struct SweepReport {
    std::string name;
    bool conjectural = false;
    std::vector<AlphaSweep> levels;

    Outcome overall() const;
};

} // namespace qdissect
