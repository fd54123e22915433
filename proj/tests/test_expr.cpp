#include <doctest.h>

#include <random>

#include "qdissect/expr.hpp"
#include "qdissect/pochhammer.hpp"
#include "qdissect/series.hpp"

using namespace qdissect;

namespace {

const CoefficientRing kZ = CoefficientRing::integers();

ExprPtr random_ast(std::mt19937& rng, int depth) {
    if (depth <= 0) {
        switch (rng() % 3) {
        case 0: return Expr::integer(1 + rng() % 9);
        case 1: return Expr::q();
        default: return Expr::f_symbol(1 + rng() % 12);
        }
    }
    switch (rng() % 6) {
    case 0: return Expr::add(random_ast(rng, depth - 1), random_ast(rng, depth - 1));
    case 1: return Expr::sub(random_ast(rng, depth - 1), random_ast(rng, depth - 1));
    case 2: return Expr::mul(random_ast(rng, depth - 1), random_ast(rng, depth - 1));
    case 3: return Expr::div(random_ast(rng, depth - 1), random_ast(rng, depth - 1));
    case 4: return Expr::neg(random_ast(rng, depth - 1));
    default: {
        ExprPtr base = random_ast(rng, depth - 1);
        long long e = static_cast<long long>(rng() % 7) - 3;
        // negative powers of q are outside the grammar
        if (base->kind == Expr::Kind::Q && e < 0) e = -e;
        return Expr::pow(base, e);
    }
    }
}

} // namespace

TEST_CASE("parse simple forms") {
    CHECK(format(parse("f1")) == "f1");
    CHECK(format(parse("f2 ^ 14 * f8^4")) == "f2^14*f8^4");
    CHECK(format(parse("1/f1^4")) == "1/f1^4");
    CHECK(format(parse("f4^14/(f2^14*f8^4)+4*q*f4^2*f8^4/f2^10")) ==
          "f4^14/(f2^14*f8^4)+4*q*f4^2*f8^4/f2^10");
    CHECK(format(parse("(f2^3/f6)^2+q*f12^2")) == "(f2^3/f6)^2+q*f12^2");
    CHECK(format(parse("f8^-1")) == "f8^-1");
    CHECK(format(parse("-q")) == "-q");
    CHECK(format(parse("0")) == "0");
}

TEST_CASE("precedence") {
    // '^' binds tighter than unary minus: -f1^2 is -(f1^2)
    auto e = parse("-f1^2");
    CHECK(e->kind == Expr::Kind::Neg);
    CHECK(e->lhs->kind == Expr::Kind::Pow);

    // a-b-c associates left
    auto s = parse("1-2-3");
    CHECK(s->kind == Expr::Kind::Sub);
    CHECK(s->lhs->kind == Expr::Kind::Sub);

    // a/b/c associates left
    auto d = parse("f1/f2/f3");
    CHECK(d->kind == Expr::Kind::Div);
    CHECK(d->lhs->kind == Expr::Kind::Div);

    CHECK(structurally_equal(parse("1+2*3"),
                             Expr::add(Expr::integer(1),
                                       Expr::mul(Expr::integer(2),
                                                 Expr::integer(3)))));
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("   "), ParseError);
    CHECK_THROWS_AS(parse("f0"), ParseError);
    CHECK_THROWS_AS(parse("f"), ParseError);
    CHECK_THROWS_AS(parse("q^-1"), ParseError);
    CHECK_THROWS_AS(parse("(f1"), ParseError);
    CHECK_THROWS_AS(parse("f1^"), ParseError);
    CHECK_THROWS_AS(parse("1+"), ParseError);
    CHECK_THROWS_AS(parse("@"), ParseError);
    // no implicit multiplication
    CHECK_THROWS_AS(parse("f2^14f8^4"), ParseError);
    CHECK_THROWS_AS(parse("2q"), ParseError);

    try {
        parse("f1 + @");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
        CHECK(std::string(e.what()).find("unexpected character '@'") !=
              std::string::npos);
    }
    try {
        parse("f0");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("f0 is not a valid symbol") !=
              std::string::npos);
    }
}

TEST_CASE("format then parse is the identity on random trees") {
    std::mt19937 rng(314);
    for (int trial = 0; trial < 200; ++trial) {
        ExprPtr tree = random_ast(rng, 1 + rng() % 5);
        std::string text = format(tree);
        ExprPtr back = parse(text);
        CHECK(structurally_equal(tree, back));
        CHECK(format(back) == text);
    }
}

TEST_CASE("as_eta_quotient recognizes pure quotients") {
    auto eq = as_eta_quotient(parse("4*q*f4^2*f8^4/f2^10"));
    REQUIRE(eq.has_value());
    CHECK(eq->scalar() == 4);
    CHECK(eq->qshift() == 1);
    CHECK(eq->factors().at(4) == 2);
    CHECK(eq->factors().at(8) == 4);
    CHECK(eq->factors().at(2) == -10);

    CHECK(as_eta_quotient(parse("(f2^3/f6)^2")).has_value());
    CHECK_FALSE(as_eta_quotient(parse("f1+f2")).has_value());
    CHECK_FALSE(as_eta_quotient(parse("f1/q")).has_value()); // q in denominator
    CHECK_FALSE(as_eta_quotient(parse("1/(2*f1)")).has_value()); // 1/2 not integral
}

TEST_CASE("evaluate agrees with direct series arithmetic") {
    const std::size_t order = 64;
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 60; ++trial) {
        ExprPtr tree = random_ast(rng, 1 + rng() % 4);
        for (const auto& ring : {kZ, CoefficientRing::integers_mod(8)}) {
            TruncatedSeries via_eval(ring, 1);
            bool eval_ok = true;
            try {
                via_eval = evaluate(tree, order, ring);
            } catch (const EvalError&) {
                eval_ok = false; // a non-unit denominator somewhere
            }
            if (!eval_ok) continue;
            // reference: structural recursion without the quotient fast path
            struct Ref {
                std::size_t order;
                CoefficientRing ring;
                TruncatedSeries run(const ExprPtr& e) {
                    switch (e->kind) {
                    case Expr::Kind::Integer:
                        return TruncatedSeries::monomial(
                            mpz_class(static_cast<long>(e->value)), 0, order,
                            ring);
                    case Expr::Kind::Q:
                        return TruncatedSeries::monomial(1, 1, order, ring);
                    case Expr::Kind::FSymbol:
                        return pochhammer_series(
                            static_cast<unsigned>(e->value), order, ring);
                    case Expr::Kind::Add: return add(run(e->lhs), run(e->rhs));
                    case Expr::Kind::Sub: return sub(run(e->lhs), run(e->rhs));
                    case Expr::Kind::Mul: return mul(run(e->lhs), run(e->rhs));
                    case Expr::Kind::Div:
                        return mul(run(e->lhs), invert(run(e->rhs)));
                    case Expr::Kind::Neg: return negate(run(e->lhs));
                    case Expr::Kind::Pow: return pow(run(e->lhs), e->value);
                    }
                    throw std::logic_error("unreachable");
                }
            } ref{order, ring};
            CHECK(equals_up_to(via_eval, ref.run(tree), order));
        }
    }
}

TEST_CASE("evaluate surfaces non-unit denominators") {
    CHECK_THROWS_AS(evaluate(parse("f1/(1+f1)"), 16, kZ), EvalError);
    CHECK_THROWS_AS(evaluate(parse("1/(2*f1+0*q)"), 16,
                             CoefficientRing::integers_mod(4)),
                    EvalError);
    try {
        evaluate(parse("f1/(f1-1)"), 16, kZ);
        FAIL("expected EvalError");
    } catch (const EvalError& e) {
        CHECK(std::string(e.what()).find("f1-1") != std::string::npos);
    }
}

TEST_CASE("evaluate uses the closed quotient route consistently") {
    // same value whether or not the fast path applies
    const std::size_t order = 128;
    auto fast = evaluate(parse("f4*f6^2/(f1*f3*f12)"), order, kZ);
    auto slow = evaluate(parse("(f4*f6^2+0*q)/(f1*f3*f12)"), order, kZ);
    CHECK(equals_up_to(fast, slow, order));
}
