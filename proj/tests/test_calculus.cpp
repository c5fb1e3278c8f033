#include <doctest.h>

#include <leibniz/calculus.hpp>
#include <leibniz/dsl/canonical.hpp>
#include <leibniz/dsl/parser.hpp>
#include <leibniz/error.hpp>

#include "support.hpp"

using namespace leibniz;
using namespace leibniz::calculus;
using dsl::Expr;
using dsl::parse;
using leibniz::testing::Gen;

namespace
{

LcNumber real(long p, long q = 1)
{
    return make_real(Rational(p, q));
}

const LcNumber eps = epsilon();

ErrorKind kind_of(auto &&f)
{
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    FAIL("no error");
    return ErrorKind::ParseError;
}

bool same_function(const Expr &a, const Expr &b)
{
    const auto vars = dsl::common_variables({a, b});
    return dsl::canonicalize(a, vars) == dsl::canonicalize(b, vars);
}

Rational at(const Expr &e, const Rational &x)
{
    return standard_part(dsl::evaluate(e, {{"x", make_real(x)}}));
}

// A rational point where `denominator` is nonzero.
Rational regular_point(Gen &g, const Expr &denominator)
{
    while (true) {
        const Rational x = g.rational(12, 5);
        if (!at(denominator, x).is_zero()) {
            return x;
        }
    }
}

} // namespace

TEST_CASE("differential quotients")
{
    CHECK(differential_quotient(parse("x^2"), "x", real(3)) == real(6) + eps);
    CHECK(differential_quotient(parse("7"), "x", real(3)).is_zero());
    CHECK(differential_quotient(parse("x"), "x", real(-5, 2)) == real(1));
    CHECK(differential_quotient(parse("x^2"), "x", real(3), {}, Direction::backward) == real(6) - eps);
    // at an inassignable point
    CHECK(differential_quotient(parse("x^2"), "x", infinite_unit()) == real(2) * infinite_unit() + eps);
}

TEST_CASE("derivatives")
{
    const DiffResult square = derivative_at(parse("x^2"), "x", Rational(3));
    CHECK(square.shadow() == Rational(6));
    CHECK(square.discarded() == eps);
    CHECK(square.quotient() == make_real(square.shadow()) + square.discarded());

    CHECK(derivative_at(parse("1/x"), "x", Rational(2)).shadow() == Rational(-1, 4));
    CHECK(derivative_at(parse("sqrt(x)"), "x", Rational(4)).shadow() == Rational(1, 4));
    CHECK(derivative_at(parse("c*x"), "x", Rational(0), {{"c", real(5)}}).shadow() == Rational(5));
    CHECK(kind_of([] { derivative_at(parse("sqrt(x)"), "x", Rational(0)); }) == ErrorKind::NotFinite);
    CHECK(kind_of([] { derivative_at(parse("1/x"), "x", Rational(0)); }) == ErrorKind::DivisionByZero);
    CHECK(kind_of([] { (void)DiffResult{infinite_unit()}; }) == ErrorKind::NotFinite);
}

TEST_CASE("symbolic derivative")
{
    CHECK(same_function(symbolic_derivative(parse("x^2"), "x"), parse("2*x")));
    CHECK(same_function(symbolic_derivative(parse("1/x"), "x"), parse("-1/x^2")));
    CHECK(same_function(symbolic_derivative(parse("x*v"), "x"), parse("v")));
    const Expr xv = dsl::substitute(parse("x*v"), {{"v", parse("x^3")}});
    CHECK(same_function(symbolic_derivative(xv, "x"), parse("4*x^3")));
    CHECK(same_function(symbolic_derivative(parse("(x^2+1)^-3"), "x"), parse("-6*x/(x^2+1)^4")));
    CHECK(same_function(symbolic_derivative(parse("x*y + eps*x^2"), "y"), parse("x")));
    CHECK(kind_of([] { symbolic_derivative(parse("sqrt(x)"), "x"); }) == ErrorKind::UnsupportedNode);
    CHECK(kind_of([] { symbolic_derivative(parse("st(x)"), "x"); }) == ErrorKind::UnsupportedNode);
}

TEST_CASE("product rule report")
{
    const GalleryReport r = product_rule_report(parse("x"), parse("x^2"), "x", Rational(1));
    CHECK(r.pass());
    CHECK(derivative_at(parse("x^3"), "x", Rational(1)).shadow() == Rational(3));
    const LcNumber du = real(1) * eps;
    const LcNumber dv = pow(real(1) + eps, 2) - real(1);
    CHECK(du * dv / eps == real(2) * eps + eps * eps);

    const GalleryReport constant = product_rule_report(parse("x"), parse("3"), "x", Rational(2));
    CHECK(constant.pass());
}

TEST_CASE("scaled product case")
{
    CHECK(scaled_product_report(Rational(2), parse("x^3 - 2*x + 1"), "x", Rational(3, 2)).pass());
    CHECK(scaled_product_report(Rational(-1, 3), parse("5"), "x", Rational(0)).pass());
    CHECK(scaled_product_report(Rational(1), parse("x"), "x", Rational(0)).pass());
}

TEST_CASE("property: derivative shadow matches the symbolic oracle")
{
    Gen g(501);
    for (int i = 0; i < 500; ++i) {
        Expr f = g.polynomial("x", 4);
        Expr den = Expr::constant(Rational(1));
        if (i % 2 == 1) {
            den = g.polynomial("x", 2);
            if (same_function(den, parse("0"))) {
                continue;
            }
            f = f / den;
        }
        const Rational x = regular_point(g, den);
        INFO(dsl::to_string(f) << " at " << x.str());
        const DiffResult d = derivative_at(f, "x", x);
        CHECK(d.shadow() == at(symbolic_derivative(f, "x"), x));
        CHECK(derivative_at(f, "x", x, {}, Direction::backward).shadow() == d.shadow());
        const Classification c = classify(d.discarded());
        CHECK((c == Classification::zero || c == Classification::infinitesimal));
    }
}

TEST_CASE("property: linearity")
{
    Gen g(502);
    for (int i = 0; i < 300; ++i) {
        const Expr f = g.polynomial("x", 3);
        const Expr h = g.polynomial("x", 2) / (Expr::power(Expr::variable("x"), 2) + Expr::constant(Rational(1)));
        const Rational a = g.rational(), b = g.rational(), x = g.rational();
        const Expr combo = Expr::constant(a) * f + Expr::constant(b) * h;
        CHECK(derivative_at(combo, "x", x).shadow() ==
              a * derivative_at(f, "x", x).shadow() + b * derivative_at(h, "x", x).shadow());
    }
}

TEST_CASE("property: polynomial derivatives do not depend on the precision")
{
    Gen g(503);
    for (int i = 0; i < 200; ++i) {
        const Expr f = g.polynomial("x", 3);
        const Rational x = g.rational();
        const DiffResult base = derivative_at(f, "x", x, {}, Direction::forward, 4);
        for (int t : {16, 64}) {
            const DiffResult other = derivative_at(f, "x", x, {}, Direction::forward, t);
            CHECK(other.shadow() == base.shadow());
            CHECK(other.quotient().terms() == base.quotient().terms());
        }
    }
}

TEST_CASE("property: product rule and scaled case on random polynomials")
{
    Gen g(504);
    for (int i = 0; i < 100; ++i) {
        const Expr u = g.polynomial("x", 3), v = g.polynomial("x", 3);
        const Rational x = g.rational();
        const GalleryReport r = product_rule_report(u, v, "x", x);
        INFO(dsl::to_string(u) << " ; " << dsl::to_string(v));
        CHECK(r.pass());
        CHECK(scaled_product_report(g.nonzero_rational(), v, "x", x).pass());
    }
}
