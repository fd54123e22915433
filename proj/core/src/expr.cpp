#include "qdissect/expr.hpp"

#include <cctype>
#include <sstream>

namespace qdissect {

ExprPtr Expr::integer(long long v) {
    return std::make_shared<Expr>(Expr{Kind::Integer, v, nullptr, nullptr});
}
ExprPtr Expr::q() {
    return std::make_shared<Expr>(Expr{Kind::Q, 0, nullptr, nullptr});
}
ExprPtr Expr::f_symbol(long long r) {
    if (r < 1) throw std::invalid_argument("f-symbol index must be >= 1");
    return std::make_shared<Expr>(Expr{Kind::FSymbol, r, nullptr, nullptr});
}
ExprPtr Expr::add(ExprPtr a, ExprPtr b) {
    return std::make_shared<Expr>(Expr{Kind::Add, 0, std::move(a), std::move(b)});
}
ExprPtr Expr::sub(ExprPtr a, ExprPtr b) {
    return std::make_shared<Expr>(Expr{Kind::Sub, 0, std::move(a), std::move(b)});
}
ExprPtr Expr::mul(ExprPtr a, ExprPtr b) {
    return std::make_shared<Expr>(Expr{Kind::Mul, 0, std::move(a), std::move(b)});
}
ExprPtr Expr::div(ExprPtr a, ExprPtr b) {
    return std::make_shared<Expr>(Expr{Kind::Div, 0, std::move(a), std::move(b)});
}
ExprPtr Expr::neg(ExprPtr a) {
    return std::make_shared<Expr>(Expr{Kind::Neg, 0, std::move(a), nullptr});
}
ExprPtr Expr::pow(ExprPtr base, long long exponent) {
    return std::make_shared<Expr>(Expr{Kind::Pow, exponent, std::move(base), nullptr});
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
      position_(position) {}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    ExprPtr run() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("empty input", 0);
        ExprPtr e = parse_expr();
        skip_ws();
        if (pos_ < text_.size()) {
            throw ParseError("unexpected trailing input '" +
                                 text_.substr(pos_, 1) + "'",
                             pos_);
        }
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    long long parse_uint() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ >= text_.size() ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            throw ParseError("expected an integer", pos_);
        }
        long long v = 0;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (v > (std::numeric_limits<long long>::max() - 9) / 10) {
                throw ParseError("integer literal too large", start);
            }
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    ExprPtr parse_expr() {
        ExprPtr e = parse_term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                e = Expr::add(e, parse_term());
            } else if (c == '-') {
                ++pos_;
                e = Expr::sub(e, parse_term());
            } else {
                return e;
            }
        }
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                e = Expr::mul(e, parse_factor());
            } else if (c == '/') {
                ++pos_;
                e = Expr::div(e, parse_factor());
            } else {
                return e;
            }
        }
    }

    ExprPtr parse_factor() {
        if (peek() == '-') {
            ++pos_;
            return Expr::neg(parse_factor());
        }
        ExprPtr base = parse_atom();
        if (peek() == '^') {
            std::size_t caret = pos_;
            ++pos_;
            bool negative = false;
            if (peek() == '-') {
                negative = true;
                ++pos_;
            }
            long long e = parse_uint();
            if (negative) e = -e;
            if (base->kind == Expr::Kind::Q && e < 0) {
                throw ParseError("negative powers of q are not allowed", caret);
            }
            return Expr::pow(base, e);
        }
        return base;
    }

    ExprPtr parse_atom() {
        char c = peek();
        std::size_t start = pos_;
        if (c == '(') {
            ++pos_;
            ExprPtr e = parse_expr();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return e;
        }
        if (c == 'q') {
            ++pos_;
            return Expr::q();
        }
        if (c == 'f') {
            ++pos_;
            if (pos_ >= text_.size() ||
                !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                throw ParseError("expected an index after 'f'", pos_);
            }
            long long r = parse_uint();
            if (r == 0) throw ParseError("f0 is not a valid symbol", start);
            return Expr::f_symbol(r);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return Expr::integer(parse_uint());
        }
        if (c == '\0') throw ParseError("unexpected end of input", pos_);
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

int precedence(Expr::Kind k) {
    switch (k) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    default: return 5;
    }
}

void format_into(const ExprPtr& e, std::ostringstream& out);

void format_child(const ExprPtr& child, std::ostringstream& out, bool wrap) {
    if (wrap) out << '(';
    format_into(child, out);
    if (wrap) out << ')';
}

void format_into(const ExprPtr& e, std::ostringstream& out) {
    const int prec = precedence(e->kind);
    switch (e->kind) {
    case Expr::Kind::Integer:
        out << e->value;
        break;
    case Expr::Kind::Q:
        out << 'q';
        break;
    case Expr::Kind::FSymbol:
        out << 'f' << e->value;
        break;
    case Expr::Kind::Neg:
        out << '-';
        format_child(e->lhs, out, precedence(e->lhs->kind) < prec);
        break;
    case Expr::Kind::Pow:
        format_child(e->lhs, out, precedence(e->lhs->kind) < 5);
        out << '^' << e->value;
        break;
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
        format_child(e->lhs, out, precedence(e->lhs->kind) < prec);
        out << (e->kind == Expr::Kind::Add   ? '+'
                : e->kind == Expr::Kind::Sub ? '-'
                : e->kind == Expr::Kind::Mul ? '*'
                                             : '/');
        format_child(e->rhs, out, precedence(e->rhs->kind) <= prec);
        break;
    }
}

bool checked_mul(long long a, long long b, long long& out) {
    return !__builtin_mul_overflow(a, b, &out);
}

// Raise a quotient to an integer power; nullopt when the result leaves the
// representable eta-quotient form (scalar overflow, q in a denominator).
std::optional<EtaQuotient> eta_pow(const EtaQuotient& base, long long e) {
    if (e == 0) return EtaQuotient();
    bool invert = e < 0;
    long long a = invert ? -e : e;
    if (invert && (base.qshift() != 0 ||
                   (base.scalar() != 1 && base.scalar() != -1))) {
        return std::nullopt;
    }
    long long scalar = 1;
    if (base.scalar() == 1 || base.scalar() == -1) {
        scalar = (base.scalar() == -1 && a % 2 == 1) ? -1 : 1;
    } else {
        for (long long i = 0; i < a; ++i) {
            if (!checked_mul(scalar, base.scalar(), scalar)) return std::nullopt;
        }
    }
    EtaQuotient result;
    result.with_scalar(scalar);
    result.with_qshift(base.qshift() * static_cast<std::size_t>(a));
    for (const auto& [r, er] : base.factors()) {
        long long exponent;
        if (!checked_mul(er, invert ? -a : a, exponent)) return std::nullopt;
        result.with_factor(r, exponent);
    }
    return result;
}

} // namespace

ExprPtr parse(const std::string& text) { return Parser(text).run(); }

std::string format(const ExprPtr& e) {
    std::ostringstream out;
    format_into(e, out);
    return out.str();
}

bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->value != b->value) return false;
    return structurally_equal(a->lhs, b->lhs) && structurally_equal(a->rhs, b->rhs);
}

std::optional<EtaQuotient> as_eta_quotient(const ExprPtr& e) {
    switch (e->kind) {
    case Expr::Kind::Integer:
        return EtaQuotient().with_scalar(e->value);
    case Expr::Kind::Q:
        return EtaQuotient().with_qshift(1);
    case Expr::Kind::FSymbol:
        return EtaQuotient().with_factor(static_cast<unsigned>(e->value), 1);
    case Expr::Kind::Neg: {
        auto inner = as_eta_quotient(e->lhs);
        if (!inner) return std::nullopt;
        return inner->with_scalar(-1);
    }
    case Expr::Kind::Mul: {
        auto a = as_eta_quotient(e->lhs);
        auto b = as_eta_quotient(e->rhs);
        if (!a || !b) return std::nullopt;
        return *a * *b;
    }
    case Expr::Kind::Div: {
        auto a = as_eta_quotient(e->lhs);
        auto b = as_eta_quotient(e->rhs);
        if (!a || !b) return std::nullopt;
        auto inv = eta_pow(*b, -1);
        if (!inv) return std::nullopt;
        return *a * *inv;
    }
    case Expr::Kind::Pow: {
        auto base = as_eta_quotient(e->lhs);
        if (!base) return std::nullopt;
        return eta_pow(*base, e->value);
    }
    default:
        return std::nullopt;
    }
}

TruncatedSeries evaluate(const ExprPtr& e, std::size_t order,
                         const CoefficientRing& ring) {
    if (auto eq = as_eta_quotient(e)) return expand(*eq, order, ring);
    switch (e->kind) {
    case Expr::Kind::Integer:
        return TruncatedSeries::monomial(mpz_class(static_cast<long>(e->value)),
                                         0, order, ring);
    case Expr::Kind::Q:
        return TruncatedSeries::monomial(1, 1, order, ring);
    case Expr::Kind::FSymbol:
        return pochhammer_series(static_cast<unsigned>(e->value), order, ring);
    case Expr::Kind::Add:
        return add(evaluate(e->lhs, order, ring), evaluate(e->rhs, order, ring));
    case Expr::Kind::Sub:
        return sub(evaluate(e->lhs, order, ring), evaluate(e->rhs, order, ring));
    case Expr::Kind::Mul:
        return mul(evaluate(e->lhs, order, ring), evaluate(e->rhs, order, ring));
    case Expr::Kind::Div:
        try {
            return mul(evaluate(e->lhs, order, ring),
                       invert(evaluate(e->rhs, order, ring)));
        } catch (const NonUnitError& err) {
            throw EvalError(std::string(err.what()) + " in denominator '" +
                            format(e->rhs) + "'");
        }
    case Expr::Kind::Neg:
        return negate(evaluate(e->lhs, order, ring));
    case Expr::Kind::Pow:
        try {
            return pow(evaluate(e->lhs, order, ring), e->value);
        } catch (const NonUnitError& err) {
            throw EvalError(std::string(err.what()) + " in base '" +
                            format(e->lhs) + "'");
        }
    }
    throw EvalError("unreachable expression kind");
}

} // namespace qdissect
