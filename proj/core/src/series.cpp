#include "qdissect/series.hpp"

#include <algorithm>
#include <sstream>

namespace qdissect {

namespace {

constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 32) - 1;

std::uint64_t reduce_into(const mpz_class& v, std::uint64_t m) {
    mpz_class r;
    mpz_class mm(static_cast<unsigned long>(m));
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mm.get_mpz_t());
    return r.get_ui();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    // extended Euclid; throws if a is not a unit
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m),
                 new_r = static_cast<std::int64_t>(a % m);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    if (r != 1) {
        throw NonUnitError("constant term " + std::to_string(a) +
                           " is not a unit modulo " + std::to_string(m));
    }
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

template <typename V>
std::vector<std::size_t> nonzero_indices(const V& v) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) idx.push_back(i);
    }
    return idx;
}

void check_same_ring(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (!(a.ring() == b.ring())) {
        throw RingMismatchError("coefficient ring mismatch: " +
                                a.ring().describe() + " vs " +
                                b.ring().describe());
    }
}

} // namespace

CoefficientRing CoefficientRing::integers_mod(std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("modulus must be >= 2");
    if (m > kMaxModulus) {
        throw std::invalid_argument("modulus exceeds the 32-bit backend limit");
    }
    return {RingKind::IntegersMod, m};
}

std::string CoefficientRing::describe() const {
    if (kind == RingKind::Integers) return "Z";
    return "Z/" + std::to_string(modulus);
}

TruncatedSeries::TruncatedSeries(CoefficientRing ring, std::size_t order) {
    if (order == 0) throw std::invalid_argument("series order must be positive");
    ring_ = ring;
    order_ = order;
    if (ring.kind == RingKind::Integers) {
        coeffs_ = BigCoeffs(order);
    } else {
        coeffs_ = ModCoeffs(order, 0);
    }
}

TruncatedSeries TruncatedSeries::from_coeffs(const std::vector<mpz_class>& coeffs,
                                             std::size_t order,
                                             CoefficientRing ring) {
    if (order == 0) throw std::invalid_argument("series order must be positive");
    if (coeffs.size() > order) {
        throw std::invalid_argument("more coefficients than the requested order");
    }
    TruncatedSeries s(ring, order);
    if (ring.kind == RingKind::Integers) {
        auto& v = std::get<BigCoeffs>(s.coeffs_);
        std::copy(coeffs.begin(), coeffs.end(), v.begin());
    } else {
        auto& v = std::get<ModCoeffs>(s.coeffs_);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            v[i] = reduce_into(coeffs[i], ring.modulus);
        }
    }
    return s;
}

TruncatedSeries TruncatedSeries::from_coeffs(std::initializer_list<long> coeffs,
                                             std::size_t order,
                                             CoefficientRing ring) {
    std::vector<mpz_class> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) v.emplace_back(c);
    return from_coeffs(v, order, ring);
}

TruncatedSeries TruncatedSeries::one(std::size_t order, CoefficientRing ring) {
    return monomial(1, 0, order, ring);
}

TruncatedSeries TruncatedSeries::monomial(const mpz_class& c, std::size_t exponent,
                                          std::size_t order, CoefficientRing ring) {
    TruncatedSeries s(ring, order);
    if (exponent >= order) return s;
    if (ring.kind == RingKind::Integers) {
        std::get<BigCoeffs>(s.coeffs_)[exponent] = c;
    } else {
        std::get<ModCoeffs>(s.coeffs_)[exponent] = reduce_into(c, ring.modulus);
    }
    return s;
}

TruncatedSeries TruncatedSeries::from_raw(CoefficientRing ring, BigCoeffs coeffs) {
    if (ring.kind != RingKind::Integers) {
        throw std::invalid_argument("raw big coefficients require the integer ring");
    }
    if (coeffs.empty()) throw std::invalid_argument("series order must be positive");
    TruncatedSeries s;
    s.ring_ = ring;
    s.order_ = coeffs.size();
    s.coeffs_ = std::move(coeffs);
    return s;
}

TruncatedSeries TruncatedSeries::from_raw(CoefficientRing ring, ModCoeffs coeffs) {
    if (ring.kind != RingKind::IntegersMod) {
        throw std::invalid_argument("raw residues require a modular ring");
    }
    if (coeffs.empty()) throw std::invalid_argument("series order must be positive");
    TruncatedSeries s;
    s.ring_ = ring;
    s.order_ = coeffs.size();
    s.coeffs_ = std::move(coeffs);
    return s;
}

mpz_class TruncatedSeries::coefficient(std::size_t n) const {
    if (n >= order_) {
        throw std::out_of_range("coefficient index " + std::to_string(n) +
                                " is at or above the truncation order " +
                                std::to_string(order_));
    }
    if (ring_.kind == RingKind::Integers) {
        return std::get<BigCoeffs>(coeffs_)[n];
    }
    return mpz_class(static_cast<unsigned long>(std::get<ModCoeffs>(coeffs_)[n]));
}

bool TruncatedSeries::is_zero() const { return nonzero_count() == 0; }

std::size_t TruncatedSeries::nonzero_count() const {
    std::size_t count = 0;
    if (ring_.kind == RingKind::Integers) {
        for (const auto& c : std::get<BigCoeffs>(coeffs_)) {
            if (c != 0) ++count;
        }
    } else {
        for (auto c : std::get<ModCoeffs>(coeffs_)) {
            if (c != 0) ++count;
        }
    }
    return count;
}

std::string TruncatedSeries::to_tsv() const {
    std::ostringstream out;
    for (std::size_t n = 0; n < order_; ++n) {
        mpz_class c = coefficient(n);
        if (c != 0) out << n << '\t' << c.get_str() << '\n';
    }
    return out.str();
}

const TruncatedSeries::BigCoeffs& TruncatedSeries::big_coeffs() const {
    if (ring_.kind != RingKind::Integers) {
        throw std::logic_error("series is not over the integer ring");
    }
    return std::get<BigCoeffs>(coeffs_);
}

const TruncatedSeries::ModCoeffs& TruncatedSeries::mod_coeffs() const {
    if (ring_.kind != RingKind::IntegersMod) {
        throw std::logic_error("series is not over a modular ring");
    }
    return std::get<ModCoeffs>(coeffs_);
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_same_ring(a, b);
    std::size_t order = std::min(a.order(), b.order());
    if (a.ring().kind == RingKind::Integers) {
        TruncatedSeries::BigCoeffs c(order);
        const auto& av = a.big_coeffs();
        const auto& bv = b.big_coeffs();
        for (std::size_t i = 0; i < order; ++i) c[i] = av[i] + bv[i];
        return TruncatedSeries::from_raw(a.ring(), std::move(c));
    }
    const std::uint64_t m = a.ring().modulus;
    TruncatedSeries::ModCoeffs c(order);
    const auto& av = a.mod_coeffs();
    const auto& bv = b.mod_coeffs();
    for (std::size_t i = 0; i < order; ++i) {
        std::uint64_t s = av[i] + bv[i];
        c[i] = s >= m ? s - m : s;
    }
    return TruncatedSeries::from_raw(a.ring(), std::move(c));
}

TruncatedSeries negate(const TruncatedSeries& a) {
    if (a.ring().kind == RingKind::Integers) {
        TruncatedSeries::BigCoeffs c(a.order());
        const auto& av = a.big_coeffs();
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = -av[i];
        return TruncatedSeries::from_raw(a.ring(), std::move(c));
    }
    const std::uint64_t m = a.ring().modulus;
    TruncatedSeries::ModCoeffs c(a.order());
    const auto& av = a.mod_coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = av[i] == 0 ? 0 : m - av[i];
    return TruncatedSeries::from_raw(a.ring(), std::move(c));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    return add(a, negate(b));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_same_ring(a, b);
    std::size_t order = std::min(a.order(), b.order());
    // Schoolbook product; the outer loop runs over the operand with fewer
    // nonzero terms, so sparse factors (pentagonal expansions, product-form
    // factors) cost O(order * nnz) instead of O(order^2).
    if (a.ring().kind == RingKind::Integers) {
        const auto& av = a.big_coeffs();
        const auto& bv = b.big_coeffs();
        bool a_outer = a.nonzero_count() <= b.nonzero_count();
        const auto& outer = a_outer ? av : bv;
        const auto& inner = a_outer ? bv : av;
        TruncatedSeries::BigCoeffs c(order);
        for (std::size_t i = 0; i < order; ++i) {
            if (outer[i] == 0) continue;
            const mpz_class& oi = outer[i];
            for (std::size_t j = 0; j + i < order; ++j) {
                mpz_addmul(c[i + j].get_mpz_t(), oi.get_mpz_t(),
                           inner[j].get_mpz_t());
            }
        }
        return TruncatedSeries::from_raw(a.ring(), std::move(c));
    }
    const std::uint64_t m = a.ring().modulus;
    const auto& av = a.mod_coeffs();
    const auto& bv = b.mod_coeffs();
    bool a_outer = a.nonzero_count() <= b.nonzero_count();
    const auto& outer = a_outer ? av : bv;
    const auto& inner = a_outer ? bv : av;
    TruncatedSeries::ModCoeffs c(order, 0);
    for (std::size_t i = 0; i < order; ++i) {
        if (outer[i] == 0) continue;
        std::uint64_t oi = outer[i];
        for (std::size_t j = 0; j + i < order; ++j) {
            c[i + j] = (c[i + j] + oi * inner[j]) % m;
        }
    }
    return TruncatedSeries::from_raw(a.ring(), std::move(c));
}

TruncatedSeries invert(const TruncatedSeries& a) {
    const std::size_t order = a.order();
    if (a.ring().kind == RingKind::Integers) {
        const auto& av = a.big_coeffs();
        if (av[0] != 1 && av[0] != -1) {
            throw NonUnitError("constant term " + av[0].get_str() +
                               " is not a unit over the integers");
        }
        auto nz = nonzero_indices(av);
        TruncatedSeries::BigCoeffs b(order);
        b[0] = av[0]; // a0^-1 == a0 for a0 = +-1
        mpz_class acc;
        for (std::size_t n = 1; n < order; ++n) {
            acc = 0;
            for (std::size_t k : nz) {
                if (k == 0) continue;
                if (k > n) break;
                mpz_addmul(acc.get_mpz_t(), av[k].get_mpz_t(),
                           b[n - k].get_mpz_t());
            }
            b[n] = -av[0] * acc;
        }
        return TruncatedSeries::from_raw(a.ring(), std::move(b));
    }
    const std::uint64_t m = a.ring().modulus;
    const auto& av = a.mod_coeffs();
    const std::uint64_t inv0 = inverse_mod(av[0], m);
    auto nz = nonzero_indices(av);
    TruncatedSeries::ModCoeffs b(order, 0);
    b[0] = inv0;
    for (std::size_t n = 1; n < order; ++n) {
        std::uint64_t acc = 0;
        for (std::size_t k : nz) {
            if (k == 0) continue;
            if (k > n) break;
            acc = (acc + av[k] * b[n - k]) % m;
        }
        b[n] = (inv0 * (m - acc)) % m;
    }
    return TruncatedSeries::from_raw(a.ring(), std::move(b));
}

TruncatedSeries pow(const TruncatedSeries& a, long long e) {
    if (e < 0) return pow(invert(a), -e);
    TruncatedSeries result = TruncatedSeries::one(a.order(), a.ring());
    TruncatedSeries base = a;
    unsigned long long k = static_cast<unsigned long long>(e);
    while (k != 0) {
        if (k & 1) result = mul(result, base);
        k >>= 1;
        if (k != 0) base = mul(base, base);
    }
    return result;
}

TruncatedSeries substitute_power(const TruncatedSeries& a, std::size_t k) {
    if (k == 0) throw std::invalid_argument("substitution power must be positive");
    const std::size_t order = a.order();
    if (a.ring().kind == RingKind::Integers) {
        const auto& av = a.big_coeffs();
        TruncatedSeries::BigCoeffs c(order);
        for (std::size_t n = 0; n * k < order; ++n) c[n * k] = av[n];
        return TruncatedSeries::from_raw(a.ring(), std::move(c));
    }
    const auto& av = a.mod_coeffs();
    TruncatedSeries::ModCoeffs c(order, 0);
    for (std::size_t n = 0; n * k < order; ++n) c[n * k] = av[n];
    return TruncatedSeries::from_raw(a.ring(), std::move(c));
}

TruncatedSeries extract_progression(const TruncatedSeries& a, std::size_t m,
                                    std::size_t j) {
    if (m == 0) throw std::invalid_argument("progression step must be positive");
    if (j >= m) throw std::invalid_argument("residue must satisfy j < m");
    if (j >= a.order()) {
        throw std::invalid_argument(
            "residue " + std::to_string(j) +
            " is beyond the truncation order " + std::to_string(a.order()));
    }
    const std::size_t out_order = (a.order() - j + m - 1) / m;
    if (a.ring().kind == RingKind::Integers) {
        const auto& av = a.big_coeffs();
        TruncatedSeries::BigCoeffs c(out_order);
        for (std::size_t n = 0; n < out_order; ++n) c[n] = av[m * n + j];
        return TruncatedSeries::from_raw(a.ring(), std::move(c));
    }
    const auto& av = a.mod_coeffs();
    TruncatedSeries::ModCoeffs c(out_order, 0);
    for (std::size_t n = 0; n < out_order; ++n) c[n] = av[m * n + j];
    return TruncatedSeries::from_raw(a.ring(), std::move(c));
}

TruncatedSeries reduce_mod(const TruncatedSeries& a, std::uint64_t m) {
    CoefficientRing target = CoefficientRing::integers_mod(m);
    TruncatedSeries::ModCoeffs c(a.order(), 0);
    if (a.ring().kind == RingKind::Integers) {
        const auto& av = a.big_coeffs();
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = reduce_into(av[i], m);
    } else {
        const std::uint64_t big = a.ring().modulus;
        if (big % m != 0) {
            throw std::invalid_argument(
                "cannot reduce modulo " + std::to_string(m) +
                ": it does not divide the current modulus " + std::to_string(big));
        }
        const auto& av = a.mod_coeffs();
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = av[i] % m;
    }
    return TruncatedSeries::from_raw(target, std::move(c));
}

std::optional<Mismatch> first_difference(const TruncatedSeries& a,
                                         const TruncatedSeries& b,
                                         std::size_t n) {
    check_same_ring(a, b);
    if (n > a.order() || n > b.order()) {
        throw std::invalid_argument(
            "comparison up to " + std::to_string(n) +
            " exceeds the guaranteed order " +
            std::to_string(std::min(a.order(), b.order())));
    }
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class x = a.coefficient(i);
        mpz_class y = b.coefficient(i);
        if (x != y) return Mismatch{i, std::move(x), std::move(y)};
    }
    return std::nullopt;
}

bool equals_up_to(const TruncatedSeries& a, const TruncatedSeries& b,
                  std::size_t n) {
    return !first_difference(a, b, n).has_value();
}

} // namespace qdissect
