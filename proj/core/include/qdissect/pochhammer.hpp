#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qdissect/report.hpp"
#include "qdissect/series.hpp"

namespace qdissect {

/// A finite product c * q^t * prod_r f_r^{e_r} where
/// f_r = (1 - q^r)(1 - q^{2r})(1 - q^{3r})...
/// Factors are kept canonical: sorted by r, zero exponents dropped.
class EtaQuotient {
public:
    EtaQuotient() = default;

    EtaQuotient& with_factor(unsigned r, long long exponent);
    EtaQuotient& with_scalar(long long c);
    EtaQuotient& with_qshift(std::size_t t);

    const std::map<unsigned, long long>& factors() const { return factors_; }
    long long scalar() const { return scalar_; }
    std::size_t qshift() const { return qshift_; }

    EtaQuotient operator*(const EtaQuotient& other) const;

    bool operator==(const EtaQuotient&) const = default;

private:
    std::map<unsigned, long long> factors_;
    long long scalar_ = 1;
    std::size_t qshift_ = 0;
};

/// Text form, e.g. "4*q*f4^2*f8^4/f2^10".
std::string to_string(const EtaQuotient& eq);

/// Signed sparse expansion of f_r below `order` by the pentagonal number
/// theorem: exponents r*k(3k-1)/2 and r*k(3k+1)/2 with sign (-1)^k.
std::vector<std::pair<std::size_t, int>> pentagonal_terms(unsigned r,
                                                          std::size_t order);

/// f_r expanded to a dense TruncatedSeries.
TruncatedSeries pochhammer_series(unsigned r, std::size_t order,
                                  CoefficientRing ring);

/// Expand the full quotient. Positive exponents go through pow();
/// each negative exponent unit is an exact back-substitution against the
/// sparse pentagonal terms, bit-identical to mul-by-invert.
TruncatedSeries expand(const EtaQuotient& eq, std::size_t order,
                       CoefficientRing ring);

/// Checks f_m^{p^j * k} == f_{p*m}^{p^{j-1} * k} over Z/p^j up to `order`.
VerificationReport verify_frobenius(unsigned m, unsigned p, unsigned j,
                                    unsigned k, std::size_t order);

/// Rewrite each factor f_m^e with p^j | e as f_{p*m}^{e/p}; the result is
/// congruent to the input mod p^j.
EtaQuotient frobenius_reduce(const EtaQuotient& eq, unsigned p, unsigned j);

} // namespace qdissect
