#include "qdissect/designated.hpp"

#include <stdexcept>

#include "qdissect/pochhammer.hpp"

namespace qdissect {

namespace {

constexpr unsigned kEnumerationBound = 40;

// Sum over partitions of n into parts <= max_part of the product of
// multiplicities. Deliberately a plain recursion over canonical
// nonincreasing partitions; shares nothing with the series machinery.
mpz_class count_designated(unsigned n, unsigned max_part,
                           const PartRestriction& restriction) {
    if (n == 0) return 1;
    mpz_class total = 0;
    for (unsigned p = std::min(max_part, n); p >= 1; --p) {
        if (!restriction.admits(p)) continue;
        for (unsigned j = 1; j * p <= n; ++j) {
            total += j * count_designated(n - j * p, p - 1, restriction);
        }
    }
    return total;
}

} // namespace

PartRestriction PartRestriction::k_regular(unsigned k) {
    if (k < 2) throw std::invalid_argument("k-regular restriction needs k >= 2");
    return {Kind::KRegular, k};
}

std::string PartRestriction::describe() const {
    if (kind == Kind::All) return "all";
    return std::to_string(k) + "-regular";
}

mpz_class enumerate_pd(unsigned n, PartRestriction restriction) {
    if (n > kEnumerationBound) {
        throw std::invalid_argument(
            "enumeration is limited to n <= " + std::to_string(kEnumerationBound));
    }
    return count_designated(n, n, restriction);
}

TruncatedSeries pd_product_series(std::size_t order, PartRestriction restriction,
                                  CoefficientRing ring) {
    TruncatedSeries acc = TruncatedSeries::one(order, ring);
    std::vector<mpz_class> factor;
    for (std::size_t i = 1; i < order; ++i) {
        if (!restriction.admits(i)) continue;
        factor.assign(order, 0);
        factor[0] = 1;
        for (std::size_t j = 1; i * j < order; ++j) factor[i * j] = j;
        acc = mul(acc, TruncatedSeries::from_coeffs(factor, order, ring));
    }
    return acc;
}

TruncatedSeries pd2_eta_series(std::size_t order, CoefficientRing ring) {
    EtaQuotient eq;
    eq.with_factor(4, 1).with_factor(6, 2);
    eq.with_factor(1, -1).with_factor(3, -1).with_factor(12, -1);
    return expand(eq, order, ring);
}

} // namespace qdissect
