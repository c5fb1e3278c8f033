#include <doctest.h>

#include <sstream>

#include <leibniz/dsl/evaluate.hpp>
#include <leibniz/dsl/parser.hpp>
#include <leibniz/error.hpp>
#include <leibniz/gallery.hpp>
#include <leibniz/serialize.hpp>

#include "support.hpp"

using namespace leibniz;
using namespace leibniz::gallery;
using leibniz::testing::Gen;

namespace
{

const char *const final_lhs = "(y + 2 + 2/H)^2 - (x^2 + y^2)*(1 + 4/H + 4/H^2)";

LcNumber final_at(const Rational &x, const Rational &y, int precision = default_precision)
{
    return dsl::evaluate(dsl::parse(final_lhs), {{"x", make_real(x, precision)}, {"y", make_real(y, precision)}},
                         precision);
}

// Expanded by hand: with S = x^2 + y^2 the value is
// (y+2)^2 - S + (4(y+2) - 4S) eps + (4 - 4S) eps^2.
LcNumber final_by_hand(const Rational &x, const Rational &y)
{
    const Rational s = x * x + y * y;
    return LcNumber::from_terms({{Rational(0), (y + Rational(2)) * (y + Rational(2)) - s},
                                 {Rational(1), Rational(4) * (y + Rational(2)) - Rational(4) * s},
                                 {Rational(2), Rational(4) - Rational(4) * s}});
}

Rational parabola(const Rational &x)
{
    return x * x / Rational(4) - Rational(1);
}

} // namespace

TEST_CASE("default reports pass")
{
    for (auto id : {ExampleId::parallel_lines, ExampleId::infinitesimal_equality, ExampleId::ellipse_parabola,
                    ExampleId::product_rule}) {
        const GalleryReport r = run_example(id);
        INFO(example_name(id));
        CHECK(r.pass());
        CHECK(r.first_failure() == nullptr);
        CHECK_FALSE(r.claims.empty());
    }
    CHECK(default_grid().size() == 7);
    CHECK(default_grid().front() == Rational(-3));
}

TEST_CASE("parallel line through (0, 1)")
{
    const LcNumber y = dsl::evaluate(dsl::parse("1 - x/H"), {{"x", make_real(Rational(4))}});
    CHECK(y == make_real(Rational(1)) - make_real(Rational(4)) * epsilon());
    CHECK(standard_part(y) == Rational(1));
    const GalleryReport r = parallel_lines_report({Rational(4), Rational(0)});
    CHECK(r.pass());
    bool slope = false, intercept = false;
    for (const auto &c : r.claims) {
        if (c.description == "slope of L_H") {
            slope = true;
            CHECK(c.computed == "-1·eps^1");
        }
        if (c.description == "x-intercept of L_H") {
            intercept = true;
            CHECK(c.computed == "1·eps^-1");
        }
    }
    CHECK(slope);
    CHECK(intercept);
}

TEST_CASE("infinitesimal equality")
{
    CHECK(infinitesimal_equality_report(Rational(3)).pass());
    CHECK(infinitesimal_equality_report(Rational(0)).pass());
    CHECK(tlh_reduce(epsilon()) == epsilon());
    CHECK(tlh_reduce(make_real(Rational(6)) + epsilon()) == make_real(Rational(6)));
}

TEST_CASE("conic chain")
{
    const ConicChainResult result = verify_conic_chain();
    CHECK(result.report.pass());
    CHECK(result.cofactor == "-4*H^2");
    CHECK(result.cleared_cofactor == "-4");

    ConicChain broken = ConicChain::standard();
    broken.squared_rhs = "(H + 3)^2";
    try {
        verify_conic_chain(broken);
        FAIL("expected ChainBroken");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::ChainBroken);
    }
    ConicChain wrong_final = ConicChain::standard();
    wrong_final.final_lhs = "(y + 2 + 2/H)^2 - (x^2 + y^2)*(1 + 4/H)";
    CHECK_THROWS_AS(verify_conic_chain(wrong_final), Error);
}

TEST_CASE("parabola shadow by hand")
{
    CHECK(final_at(Rational(2), Rational(0)) == final_by_hand(Rational(2), Rational(0)));
    CHECK(standard_part(final_at(Rational(2), Rational(0))) == Rational(0));
    CHECK(parabola(Rational(0)) == Rational(-1));
    CHECK(standard_part(final_at(Rational(2), Rational(1))) == Rational(4));
    CHECK(parabola_shadow_report(default_grid()).pass());
}

TEST_CASE("property: parabola shadow for random x0")
{
    Gen g(601);
    std::vector<Rational> xs;
    for (int i = 0; i < 300; ++i) {
        const Rational x = g.rational(40, 13);
        const Rational y = parabola(x);
        const LcNumber v = final_at(x, y);
        CHECK(v == final_by_hand(x, y));
        CHECK(standard_part(v) == Rational(0));
        CHECK((v.is_zero() || *v.leading_exponent() >= Rational(1)));
        CHECK(standard_part(final_at(x, y + Rational(1))) == Rational(4));
        xs.push_back(x);
    }
    CHECK(parabola_shadow_report(xs).pass());
}

TEST_CASE("parabola csv")
{
    const std::string csv = parabola_csv({Rational(-2), Rational(0), Rational(3)});
    CHECK(csv == "x0,y0,st_of_lhs\n-2,0,0\n0,-1,0\n3,5/4,0\n");
}

TEST_CASE("property: parallel lines over random abscissae")
{
    Gen g(602);
    std::vector<Rational> xs;
    for (int i = 0; i < 1000; ++i) {
        xs.push_back(g.rational(1000, 97));
    }
    CHECK(parallel_lines_report(xs).pass());
}

TEST_CASE("reports do not depend on the precision")
{
    for (auto id : {ExampleId::parallel_lines, ExampleId::infinitesimal_equality, ExampleId::ellipse_parabola,
                    ExampleId::product_rule}) {
        const std::string base = to_json(run_example(id, 16)).dump();
        CHECK(to_json(run_example(id, 4)).dump() == base);
        CHECK(to_json(run_example(id, 64)).dump() == base);
    }
}

TEST_CASE("report bookkeeping")
{
    GalleryReport r(ExampleId::product_rule);
    r.check("a", "1", "1");
    CHECK(r.pass());
    r.check("b", "1", "2");
    CHECK_FALSE(r.pass());
    REQUIRE(r.first_failure() != nullptr);
    CHECK(r.first_failure()->description == "b");
    r.check("c", "x", "y", true);
    CHECK(r.claims.back().pass);
    CHECK(r.text().find("[FAIL] b") != std::string::npos);
    CHECK(parse_example_id("ellipse_parabola") == ExampleId::ellipse_parabola);
    CHECK_FALSE(parse_example_id("bogus"));
}
