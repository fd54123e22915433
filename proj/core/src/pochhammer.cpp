#include "qdissect/pochhammer.hpp"

#include <sstream>
#include <stdexcept>

namespace qdissect {

namespace {

// c /= f_r in place, where f_r is given by its signed pentagonal terms with
// constant term +1. Exact in the truncated ring: the unique series whose
// product with f_r reproduces the input.
void divide_by_pentagonal(TruncatedSeries::BigCoeffs& c,
                          const std::vector<std::pair<std::size_t, int>>& terms) {
    mpz_class acc;
    for (std::size_t n = 1; n < c.size(); ++n) {
        acc = c[n];
        for (std::size_t t = 1; t < terms.size(); ++t) {
            const auto [exp, sign] = terms[t];
            if (exp > n) break;
            if (sign > 0) {
                acc -= c[n - exp];
            } else {
                acc += c[n - exp];
            }
        }
        c[n] = acc;
    }
}

void divide_by_pentagonal(TruncatedSeries::ModCoeffs& c, std::uint64_t m,
                          const std::vector<std::pair<std::size_t, int>>& terms) {
    for (std::size_t n = 1; n < c.size(); ++n) {
        std::uint64_t acc = c[n];
        for (std::size_t t = 1; t < terms.size(); ++t) {
            const auto [exp, sign] = terms[t];
            if (exp > n) break;
            std::uint64_t prev = c[n - exp];
            acc = (acc + (sign > 0 ? m - prev : prev)) % m;
        }
        c[n] = acc;
    }
}

} // namespace

EtaQuotient& EtaQuotient::with_factor(unsigned r, long long exponent) {
    if (r == 0) throw std::invalid_argument("f-symbol index must be >= 1");
    if (exponent != 0) {
        auto [it, inserted] = factors_.try_emplace(r, exponent);
        if (!inserted) {
            it->second += exponent;
            if (it->second == 0) factors_.erase(it);
        }
    }
    return *this;
}

EtaQuotient& EtaQuotient::with_scalar(long long c) {
    scalar_ *= c;
    return *this;
}

EtaQuotient& EtaQuotient::with_qshift(std::size_t t) {
    qshift_ += t;
    return *this;
}

EtaQuotient EtaQuotient::operator*(const EtaQuotient& other) const {
    EtaQuotient result = *this;
    result.with_scalar(other.scalar_);
    result.with_qshift(other.qshift_);
    for (const auto& [r, e] : other.factors_) result.with_factor(r, e);
    return result;
}

std::string to_string(const EtaQuotient& eq) {
    std::ostringstream num, den;
    bool num_empty = true, den_empty = true;
    auto emit = [](std::ostringstream& out, bool& empty, const std::string& s) {
        if (!empty) out << '*';
        out << s;
        empty = false;
    };
    if (eq.scalar() != 1 || (eq.factors().empty() && eq.qshift() == 0)) {
        emit(num, num_empty, std::to_string(eq.scalar()));
    }
    if (eq.qshift() == 1) {
        emit(num, num_empty, "q");
    } else if (eq.qshift() > 1) {
        emit(num, num_empty, "q^" + std::to_string(eq.qshift()));
    }
    for (const auto& [r, e] : eq.factors()) {
        std::string sym = "f" + std::to_string(r);
        long long a = e > 0 ? e : -e;
        if (a != 1) sym += "^" + std::to_string(a);
        if (e > 0) {
            emit(num, num_empty, sym);
        } else {
            emit(den, den_empty, sym);
        }
    }
    if (num_empty) num << '1';
    if (den_empty) return num.str();
    std::string d = den.str();
    if (d.find('*') != std::string::npos) d = "(" + d + ")";
    return num.str() + "/" + d;
}

std::vector<std::pair<std::size_t, int>> pentagonal_terms(unsigned r,
                                                          std::size_t order) {
    if (r == 0) throw std::invalid_argument("Pochhammer index must be >= 1");
    std::vector<std::pair<std::size_t, int>> terms;
    terms.emplace_back(0, 1);
    for (std::size_t k = 1;; ++k) {
        std::size_t g1 = k * (3 * k - 1) / 2;
        if (g1 * r >= order) break;
        int sign = (k % 2 == 0) ? 1 : -1;
        terms.emplace_back(g1 * r, sign);
        std::size_t g2 = k * (3 * k + 1) / 2;
        if (g2 * r < order) terms.emplace_back(g2 * r, sign);
    }
    return terms;
}

TruncatedSeries pochhammer_series(unsigned r, std::size_t order,
                                  CoefficientRing ring) {
    auto terms = pentagonal_terms(r, order);
    if (ring.kind == RingKind::Integers) {
        TruncatedSeries::BigCoeffs c(order);
        for (const auto& [exp, sign] : terms) c[exp] = sign;
        return TruncatedSeries::from_raw(ring, std::move(c));
    }
    const std::uint64_t m = ring.modulus;
    TruncatedSeries::ModCoeffs c(order, 0);
    for (const auto& [exp, sign] : terms) c[exp] = sign > 0 ? 1 : m - 1;
    return TruncatedSeries::from_raw(ring, std::move(c));
}

TruncatedSeries expand(const EtaQuotient& eq, std::size_t order,
                       CoefficientRing ring) {
    TruncatedSeries acc =
        TruncatedSeries::monomial(mpz_class(static_cast<long>(eq.scalar())),
                                  eq.qshift(), order, ring);
    for (const auto& [r, e] : eq.factors()) {
        if (e > 0) {
            acc = mul(acc, pow(pochhammer_series(r, order, ring), e));
        }
    }
    for (const auto& [r, e] : eq.factors()) {
        if (e >= 0) continue;
        auto terms = pentagonal_terms(r, order);
        if (ring.kind == RingKind::Integers) {
            TruncatedSeries::BigCoeffs c = acc.big_coeffs();
            for (long long i = 0; i < -e; ++i) divide_by_pentagonal(c, terms);
            acc = TruncatedSeries::from_raw(ring, std::move(c));
        } else {
            TruncatedSeries::ModCoeffs c = acc.mod_coeffs();
            for (long long i = 0; i < -e; ++i) {
                divide_by_pentagonal(c, ring.modulus, terms);
            }
            acc = TruncatedSeries::from_raw(ring, std::move(c));
        }
    }
    return acc;
}

VerificationReport verify_frobenius(unsigned m, unsigned p, unsigned j,
                                    unsigned k, std::size_t order) {
    if (m == 0 || p < 2 || j == 0 || k == 0) {
        throw std::invalid_argument("verify_frobenius parameters must be positive");
    }
    std::uint64_t pj = 1;
    for (unsigned i = 0; i < j; ++i) pj *= p;
    CoefficientRing ring = CoefficientRing::integers_mod(pj);
    long long lhs_exp = static_cast<long long>(pj) * k;
    long long rhs_exp = static_cast<long long>(pj / p) * k;

    TruncatedSeries lhs = expand(EtaQuotient().with_factor(m, lhs_exp), order, ring);
    TruncatedSeries rhs =
        expand(EtaQuotient().with_factor(p * m, rhs_exp), order, ring);

    VerificationReport report;
    report.name = "f" + std::to_string(m) + "^" + std::to_string(lhs_exp) +
                  " = f" + std::to_string(p * m) + "^" + std::to_string(rhs_exp) +
                  " mod " + std::to_string(pj);
    report.verified_bound = order;
    if (auto diff = first_difference(lhs, rhs, order)) {
        report.outcome = Outcome::Fail;
        report.witness = Witness{diff->index, diff->lhs, diff->rhs};
    } else {
        report.outcome = Outcome::Pass;
    }
    return report;
}

EtaQuotient frobenius_reduce(const EtaQuotient& eq, unsigned p, unsigned j) {
    if (p < 2 || j == 0) {
        throw std::invalid_argument("frobenius_reduce needs p >= 2 and j >= 1");
    }
    long long pj = 1;
    for (unsigned i = 0; i < j; ++i) pj *= p;
    EtaQuotient result;
    result.with_scalar(eq.scalar());
    result.with_qshift(eq.qshift());
    for (const auto& [r, e] : eq.factors()) {
        if (e % pj == 0) {
            result.with_factor(r * p, e / static_cast<long long>(p));
        } else {
            result.with_factor(r, e);
        }
    }
    return result;
}

} // namespace qdissect
