#pragma once

#include <cstddef>

#include "qdissect/series.hpp"

namespace qdissect {

/// Which part sizes a partition may use: all of them, or only those not
/// divisible by k (k-regular). k = 2 restricts to odd parts.
struct PartRestriction {
    enum class Kind { All, KRegular };

    Kind kind = Kind::All;
    unsigned k = 0;

    static PartRestriction all() { return {Kind::All, 0}; }
    static PartRestriction k_regular(unsigned k);

    bool admits(std::size_t part) const {
        return kind == Kind::All || part % k != 0;
    }
    std::string describe() const;
};

/// Exhaustive count of partitions of n with designated summands: each
/// partition contributes the product of its part multiplicities (one
/// occurrence of each distinct part gets the designation). Bounded at
/// n <= 40; intended as an independent ground-truth oracle.
mpz_class enumerate_pd(unsigned n, PartRestriction restriction);

/// Generating-function oracle built directly from the combinatorial
/// definition: each admissible part size i contributes the factor
/// 1 + q^i + 2q^{2i} + 3q^{3i} + ... = 1 + q^i/(1-q^i)^2.
TruncatedSeries pd_product_series(std::size_t order, PartRestriction restriction,
                                  CoefficientRing ring);

/// The closed eta-quotient form f4*f6^2/(f1*f3*f12) of the odd-parts count.
TruncatedSeries pd2_eta_series(std::size_t order, CoefficientRing ring);

} // namespace qdissect
