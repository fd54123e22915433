#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "qdissect/pochhammer.hpp"
#include "qdissect/series.hpp"

namespace qdissect {

/// Expression AST over the grammar
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | atom ('^' int)?
///   atom   := int | 'q' | 'f' int | '(' expr ')'
/// with precedence ^ > unary- > * / > + - and no implicit multiplication.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Integer, Q, FSymbol, Add, Sub, Mul, Div, Neg, Pow };

    Kind kind;
    long long value = 0; // Integer literal, FSymbol index, or Pow exponent
    ExprPtr lhs;
    ExprPtr rhs;

    static ExprPtr integer(long long v);
    static ExprPtr q();
    static ExprPtr f_symbol(long long r);
    static ExprPtr add(ExprPtr a, ExprPtr b);
    static ExprPtr sub(ExprPtr a, ExprPtr b);
    static ExprPtr mul(ExprPtr a, ExprPtr b);
    static ExprPtr div(ExprPtr a, ExprPtr b);
    static ExprPtr neg(ExprPtr a);
    static ExprPtr pow(ExprPtr base, long long exponent);
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ExprPtr parse(const std::string& text);

/// Round-trips through parse() up to redundant parentheses.
std::string format(const ExprPtr& e);

bool structurally_equal(const ExprPtr& a, const ExprPtr& b);

/// Recognize a pure product/quotient of integer scalars, powers of q and
/// f-symbols; such subtrees evaluate through the fast eta-quotient path.
std::optional<EtaQuotient> as_eta_quotient(const ExprPtr& e);

TruncatedSeries evaluate(const ExprPtr& e, std::size_t order,
                         const CoefficientRing& ring);

} // namespace qdissect
