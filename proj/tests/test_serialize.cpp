#include <doctest.h>

#include <leibniz/dsl/parser.hpp>
#include <leibniz/gallery.hpp>
#include <leibniz/serialize.hpp>

#include "support.hpp"

using namespace leibniz;
using nlohmann::json;
using leibniz::testing::Gen;

TEST_CASE("series json")
{
    const LcNumber x = make_real(Rational(7, 2)) - make_monomial(Rational(1, 3), Rational(3, 2));
    const json j = to_json(x);
    CHECK(j == json::parse(R"({"terms": [{"exp": "0", "coef": "7/2"}, {"exp": "3/2", "coef": "-1/3"}], "precision": 16})"));
    CHECK(lc_number_from_json(j) == x);
    CHECK(to_json(LcNumber()).at("terms").empty());

    const LcNumber inexact = inverse(make_real(Rational(1)) - epsilon(4));
    CHECK(to_json(inexact).at("order") == "4");
    CHECK(lc_number_from_json(to_json(inexact)) == inexact);
}

TEST_CASE("property: series json round trip")
{
    Gen g(701);
    for (int i = 0; i < 500; ++i) {
        const LcNumber x = g.any(static_cast<int>(g.integer(2, 20)));
        CHECK(lc_number_from_json(json::parse(to_json(x).dump())) == x);
    }
}

TEST_CASE("gallery report json")
{
    const json j = to_json(gallery::run_example(ExampleId::parallel_lines));
    CHECK(j.at("example") == "parallel_lines");
    CHECK(j.at("parameters").is_array());
    CHECK(j.at("pass") == true);
    for (const auto &c : j.at("claims")) {
        CHECK(c.at("description").is_string());
        CHECK(c.at("computed").is_string());
        CHECK(c.at("expected").is_string());
        CHECK(c.at("pass").is_boolean());
    }
    CHECK(j.size() == 4);
}

TEST_CASE("derivative and transfer json")
{
    const json d = to_json(calculus::derivative_at(dsl::parse("x^2"), "x", Rational(3)));
    CHECK(d.at("shadow") == "6");
    CHECK(lc_number_from_json(d.at("superfluous")) == epsilon());
    CHECK(lc_number_from_json(d.at("quotient")) == make_real(Rational(6)) + epsilon());

    const json t = to_json(dsl::identities_transfer_check(dsl::parse("(x+1)^2"), dsl::parse("x^2 + 1"), 10, 3));
    CHECK(t.at("identity") == false);
    CHECK(t.at("seed") == 3);
    CHECK(t.at("finite_samples").size() == 10);
    CHECK(t.at("infinite_samples").size() == 10);
    CHECK(t.at("counterexample").at("point").contains("x"));
    const json ok = to_json(dsl::identities_transfer_check(dsl::parse("x*x"), dsl::parse("x^2"), 5));
    CHECK(ok.at("counterexample").is_null());
    CHECK(ok.at("infinite_samples")[0].at("status") == "agree");
}
