#include <doctest.h>

#include <leibniz/dsl/evaluate.hpp>
#include <leibniz/dsl/expr.hpp>
#include <leibniz/dsl/parser.hpp>
#include <leibniz/error.hpp>

#include "support.hpp"

using namespace leibniz;
using namespace leibniz::dsl;
using leibniz::testing::Gen;

namespace
{

std::optional<Error> error_of(auto &&f)
{
    try {
        f();
    } catch (const Error &e) {
        return e;
    }
    return std::nullopt;
}

std::vector<TokenKind> kinds(const std::vector<Token> &tokens)
{
    std::vector<TokenKind> out;
    for (const auto &t : tokens) {
        out.push_back(t.kind);
    }
    return out;
}

Expr x = Expr::variable("x");
Expr y = Expr::variable("y");

LcNumber real(long p, long q = 1)
{
    return make_real(Rational(p, q));
}

} // namespace

TEST_CASE("tokenizer")
{
    using enum TokenKind;
    CHECK(kinds(tokenize("1 + eps")) == std::vector{number, plus, identifier});
    const auto conic = tokenize("(y+2+2/H)^2");
    CHECK(conic.size() == 11);
    CHECK(kinds({conic.end() - 3, conic.end()}) == std::vector{rparen, caret, number});
    CHECK(tokenize("  x_1,y ")[0].text == "x_1");
    CHECK(tokenize("  x_1,y ")[1].kind == comma);
    CHECK(tokenize("0.25")[0].text == "0.25");

    const auto positions = tokenize("sqrt(x^2 + y^2) * 3/4");
    for (std::size_t i = 1; i < positions.size(); ++i) {
        CHECK(positions[i - 1].position < positions[i].position);
    }

    auto malformed = error_of([] { tokenize("3..5"); });
    REQUIRE(malformed);
    CHECK(malformed->kind() == ErrorKind::LexError);
    CHECK(malformed->position() == 2);
    auto stray = error_of([] { tokenize("1 + $"); });
    REQUIRE(stray);
    CHECK(stray->position() == 4);
    CHECK(error_of([] { tokenize("2x"); })->kind() == ErrorKind::LexError);
}

TEST_CASE("parser structure")
{
    CHECK(parse("a + dx") == Expr::variable("a") + Expr::variable("dx"));
    CHECK(parse("sqrt(x^2 + y^2)") == Expr::sqrt(Expr::power(x, 2) + Expr::power(y, 2)));
    CHECK(parse("-x^2") == -Expr::power(x, 2));
    CHECK(parse("1 - 2 - 3") == (Expr::constant(Rational(1)) - Expr::constant(Rational(2))) - Expr::constant(Rational(3)));
    CHECK(parse("x / y * x") == (x / y) * x);
    CHECK(parse("x^-2") == Expr::power(x, -2));
    CHECK(parse("3/4") == Expr::constant(Rational(3, 4)));
    CHECK(parse("2/3^2") == Expr::constant(Rational(2)) / Expr::power(Expr::constant(Rational(3)), 2));
    CHECK(parse("1 - x/H") == Expr::constant(Rational(1)) - x / Expr::infinite_unit());
    CHECK(parse("st(eps)") == Expr::st(Expr::eps()));
    CHECK(parse("0.5") == Expr::constant(Rational(1, 2)));
}

TEST_CASE("parse errors carry positions")
{
    auto e = error_of([] { parse("x ^ y"); });
    REQUIRE(e);
    CHECK(e->kind() == ErrorKind::ParseError);
    CHECK(e->position() == 4);
    CHECK(error_of([] { parse("(1 + 2"); })->kind() == ErrorKind::ParseError);
    CHECK(error_of([] { parse(""); })->kind() == ErrorKind::ParseError);
    CHECK(error_of([] { parse("1 2"); })->position() == 2);
    CHECK(error_of([] { parse("sqrt x"); })->kind() == ErrorKind::ParseError);
    CHECK(error_of([] { parse("eps(1)"); })->kind() == ErrorKind::ParseError);
    CHECK(error_of([] { parse("x^1/2"); }) == std::nullopt);
    CHECK_THROWS(Expr::variable("st"));
    CHECK_THROWS(Expr::variable(""));
}

TEST_CASE("evaluation")
{
    const Bindings at4{{"x", real(4)}};
    CHECK(evaluate(parse("1 - x/H"), at4) == real(1) - real(4) * epsilon());
    CHECK(evaluate(parse("st(1 - x/H)"), at4) == real(1));
    CHECK(evaluate(parse("eps*H"), {}) == real(1));
    CHECK(evaluate(parse("sqrt(x^2 + 9)"), at4) == real(5));

    auto zero = error_of([] { evaluate(parse("1/(x-x)"), {{"x", make_real(Rational(7))}}); });
    REQUIRE(zero);
    CHECK(zero->kind() == ErrorKind::DivisionByZero);
    CHECK(zero->position() == 1);
    auto unbound = error_of([] { evaluate(parse("1 + zz"), {}); });
    CHECK(unbound->kind() == ErrorKind::UnboundVariable);
    CHECK(unbound->position() == 4);
    CHECK(error_of([] { evaluate(parse("st(H)"), {}); })->kind() == ErrorKind::InfiniteOperand);
    CHECK(error_of([] { evaluate(parse("sqrt(-1 + eps)"), {}); })->kind() == ErrorKind::NegativeLeadingCoefficient);
}

TEST_CASE("free variables and substitution")
{
    const Expr e = parse("x*v + eps - w/x");
    CHECK(free_variables(e) == std::set<std::string>{"v", "w", "x"});
    CHECK_FALSE(is_rational_expression(parse("st(x)")));
    CHECK(is_rational_expression(e));
    const Expr s = substitute(e, {{"v", parse("x^2")}, {"w", Expr::constant(Rational(3))}});
    CHECK(free_variables(s) == std::set<std::string>{"x"});
    CHECK(evaluate(s, {{"x", real(2)}}) == evaluate(parse("2*4 + eps - 3/2"), {}));
}

TEST_CASE("property: printing round-trips")
{
    Gen g(201);
    for (int i = 0; i < 2000; ++i) {
        const Expr e = g.tree({"x", "y", "dx"}, 5, true);
        const std::string text = to_string(e);
        INFO(text);
        CHECK(parse(text) == e);
    }
}

TEST_CASE("property: evaluation commutes with the series operations")
{
    Gen g(202);
    int compared = 0;
    for (int i = 0; i < 1000; ++i) {
        const Expr a = g.tree({"x", "y"}, 3);
        const Expr b = g.tree({"x", "y"}, 3);
        const Bindings env{{"x", g.any()}, {"y", g.any()}};
        LcNumber va, vb;
        try {
            va = evaluate(a, env);
            vb = evaluate(b, env);
        } catch (const Error &) {
            continue;
        }
        CHECK(evaluate(a + b, env) == va + vb);
        CHECK(evaluate(a - b, env) == va - vb);
        CHECK(evaluate(a * b, env) == va * vb);
        CHECK(evaluate(-a, env) == -va);
        CHECK(evaluate(Expr::power(a, 2), env) == pow(va, 2));
        if (!vb.is_zero()) {
            CHECK(evaluate(a / b, env) == va / vb);
        }
        if (is_finite(va)) {
            bool known = true;
            Rational s;
            try {
                s = standard_part(va);
            } catch (const Error &) {
                known = false;
            }
            if (known) {
                CHECK(evaluate(Expr::st(a), env) == make_real(s));
            }
        }
        ++compared;
    }
    CHECK(compared > 300);
}

TEST_CASE("negative literals")
{
    CHECK(parse("-5/2") == Expr::constant(Rational(-5, 2)));
    CHECK(parse("-3^2") == -Expr::power(Expr::constant(Rational(3)), 2));
    CHECK(parse("-(5)") == -Expr::constant(Rational(5)));
    CHECK(parse("x * -2") == x * Expr::constant(Rational(-2)));
    CHECK(to_string(-Expr::constant(Rational(5))) == "(-(5))");
    CHECK(evaluate(parse("-3^2"), {}) == real(-9));
}
