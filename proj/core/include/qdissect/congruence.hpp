#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qdissect/report.hpp"
#include "qdissect/series.hpp"

namespace qdissect {

class InsufficientTruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ProofStatus { Proved, Conjectural };

/// A congruence family PD2(scale_base^alpha * (A*n + B)) == 0 (mod modulus);
/// scale_base = 1 means a single arithmetic progression.
struct CongruenceFamily {
    std::string name;
    std::uint64_t progression_step = 1;   // A
    std::uint64_t progression_offset = 0; // B
    unsigned scale_base = 1;              // 1, 2, or 4
    std::uint64_t modulus = 2;
    ProofStatus status = ProofStatus::Proved;
    std::string source;
    std::string instance_of; // parent family when this is a special case
};

/// PD2(outer*n) == PD2(inner*n) (mod modulus) for all n.
struct InternalCongruence {
    std::string name;
    std::uint64_t outer = 1;
    std::uint64_t inner = 1;
    std::uint64_t modulus = 2;
    std::string source;
};

/// Checks coefficient(s, A*n + B) == 0 mod m for 0 <= n <= n_max.
VerificationReport verify_progression(const TruncatedSeries& s, std::uint64_t A,
                                      std::uint64_t B, std::uint64_t m,
                                      std::size_t n_max);

/// Sweeps every alpha <= alpha_max over all arguments below
/// min(budget, s.order); levels with no instance are reported as uncovered,
/// never as pass.
SweepReport verify_family(const TruncatedSeries& s, const CongruenceFamily& fam,
                          unsigned alpha_max, std::size_t budget);

/// Checks coefficient(s, outer*n) == coefficient(s, inner*n) mod m
/// for 0 <= n <= n_max.
VerificationReport verify_internal(const TruncatedSeries& s,
                                   const InternalCongruence& ic,
                                   std::size_t n_max);

struct TheoremCatalog {
    std::vector<CongruenceFamily> families;
    std::vector<InternalCongruence> internals;
};

/// All congruence statements the artifact verifies, with proof status.
const TheoremCatalog& theorem_catalog();

} // namespace qdissect
