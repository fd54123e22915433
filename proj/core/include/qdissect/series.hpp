#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace qdissect {

enum class RingKind { Integers, IntegersMod };

/// Coefficient domain of a truncated series: exact integers, or integers
/// modulo a fixed small modulus (residues stored in [0, m)).
struct CoefficientRing {
    RingKind kind = RingKind::Integers;
    std::uint64_t modulus = 0; // meaningful iff kind == IntegersMod

    static CoefficientRing integers() { return {RingKind::Integers, 0}; }
    static CoefficientRing integers_mod(std::uint64_t m);

    bool operator==(const CoefficientRing&) const = default;
    std::string describe() const;
};

class RingMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NonUnitError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// First index at which two series disagree, with both values.
struct Mismatch {
    std::size_t index = 0;
    mpz_class lhs;
    mpz_class rhs;
};

/// A formal power series known exactly for exponents 0..order-1.
/// Immutable after construction; all operations return new values.
class TruncatedSeries {
public:
    using BigCoeffs = std::vector<mpz_class>;
    using ModCoeffs = std::vector<std::uint64_t>;

    TruncatedSeries(CoefficientRing ring, std::size_t order); // zero series

    static TruncatedSeries from_coeffs(const std::vector<mpz_class>& coeffs,
                                       std::size_t order, CoefficientRing ring);
    static TruncatedSeries from_coeffs(std::initializer_list<long> coeffs,
                                       std::size_t order, CoefficientRing ring);
    static TruncatedSeries one(std::size_t order, CoefficientRing ring);
    /// c * q^exponent
    static TruncatedSeries monomial(const mpz_class& c, std::size_t exponent,
                                    std::size_t order, CoefficientRing ring);

    /// Adopt a raw coefficient vector; the vector length fixes the order.
    static TruncatedSeries from_raw(CoefficientRing ring, BigCoeffs coeffs);
    static TruncatedSeries from_raw(CoefficientRing ring, ModCoeffs coeffs);

    const CoefficientRing& ring() const { return ring_; }
    std::size_t order() const { return order_; }

    mpz_class coefficient(std::size_t n) const; // throws std::out_of_range
    bool is_zero() const;
    std::size_t nonzero_count() const;

    /// One line per nonzero coefficient: "n<TAB>value", ascending n.
    std::string to_tsv() const;

    const BigCoeffs& big_coeffs() const;
    const ModCoeffs& mod_coeffs() const;

private:
    TruncatedSeries() = default;

    CoefficientRing ring_;
    std::size_t order_ = 0;
    std::variant<BigCoeffs, ModCoeffs> coeffs_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries negate(const TruncatedSeries& a);

/// Cauchy product truncated to min(a.order, b.order).
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse; requires a unit constant term (gcd(a0, m) = 1
/// under a modulus, a0 in {1, -1} over the integers).
TruncatedSeries invert(const TruncatedSeries& a);

/// Repeated squaring; pow(a, 0) = 1; negative e routes through invert.
TruncatedSeries pow(const TruncatedSeries& a, long long e);

/// q -> q^k: result[k*n] = a[n]; order preserved.
TruncatedSeries substitute_power(const TruncatedSeries& a, std::size_t k);

/// result[n] = a[m*n + j]; result order = ceil((a.order - j) / m).
TruncatedSeries extract_progression(const TruncatedSeries& a, std::size_t m,
                                    std::size_t j);

/// Map into IntegersMod m; the source must be Integers, or IntegersMod M
/// with m dividing M.
TruncatedSeries reduce_mod(const TruncatedSeries& a, std::uint64_t m);

/// Smallest index below n where a and b disagree, or nullopt if equal.
/// Refuses n above the guaranteed order of either operand.
std::optional<Mismatch> first_difference(const TruncatedSeries& a,
                                         const TruncatedSeries& b,
                                         std::size_t n);

bool equals_up_to(const TruncatedSeries& a, const TruncatedSeries& b,
                  std::size_t n);

} // namespace qdissect
