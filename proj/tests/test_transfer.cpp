#include <doctest.h>

#include <fstream>

#include <leibniz/dsl/parser.hpp>
#include <leibniz/dsl/transfer.hpp>
#include <leibniz/error.hpp>
#include <leibniz/serialize.hpp>

#include "support.hpp"

using namespace leibniz;
using namespace leibniz::dsl;
using leibniz::testing::Gen;

namespace
{

TransferReport check(const std::string &lhs, const std::string &rhs, std::size_t trials = 100, std::uint64_t seed = 0)
{
    return identities_transfer_check(parse(lhs), parse(rhs), trials, seed);
}

bool inassignable(const LcNumber &x)
{
    const Classification c = classify(x);
    if (c == Classification::infinitesimal || c == Classification::infinite) {
        return true;
    }
    return x.terms().size() > 1;
}

std::vector<std::pair<std::string, std::string>> read_corpus(const std::string &name)
{
    std::ifstream in(std::string(LEIBNIZ_TEST_DATA) + "/" + name);
    REQUIRE(in);
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    while (std::getline(in, line)) {
        line = line.substr(0, line.find('#'));
        const auto sep = line.find("==");
        if (sep != std::string::npos) {
            out.emplace_back(line.substr(0, sep), line.substr(sep + 2));
        }
    }
    return out;
}

} // namespace

TEST_CASE("binomial identity transfers to inassignable points")
{
    const TransferReport r = check("(x+y)^2", "x^2 + 2*x*y + y^2");
    CHECK(r.identity);
    CHECK(r.holds());
    CHECK_FALSE(r.counterexample);
    CHECK(r.finite_samples.size() == 100);
    CHECK(r.infinite_samples.size() == 100);
    CHECK(r.count(SampleStatus::agree) == 200);
    bool saw_infinitesimal = false, saw_infinite = false;
    for (const auto &s : r.infinite_samples) {
        bool any = false;
        for (const auto &[name, value] : s.point) {
            any = any || inassignable(value);
            saw_infinitesimal = saw_infinitesimal || classify(value) == Classification::infinitesimal;
            saw_infinite = saw_infinite || classify(value) == Classification::infinite;
        }
        CHECK(any);
    }
    CHECK(saw_infinitesimal);
    CHECK(saw_infinite);
    for (const auto &s : r.finite_samples) {
        for (const auto &[name, value] : s.point) {
            CHECK(value.terms().size() <= 1);
            CHECK(classify(value) != Classification::infinite);
            CHECK(classify(value) != Classification::infinitesimal);
        }
    }
}

TEST_CASE("squares at H + eps")
{
    const LcNumber at = infinite_unit() + epsilon();
    CHECK(evaluate(parse("x^2"), {{"x", at}}) == evaluate(parse("x*x"), {{"x", at}}));
    CHECK(check("x^2", "x*x").holds());
}

TEST_CASE("a non-identity yields a rational counterexample")
{
    const TransferReport r = check("(x+1)^2", "x^2+1");
    CHECK_FALSE(r.identity);
    CHECK_FALSE(r.holds());
    REQUIRE(r.counterexample);
    const LcNumber x = r.counterexample->point.at("x");
    CHECK(x.terms().size() <= 1);
    CHECK(classify(x) != Classification::infinite);
    CHECK(*r.counterexample->lhs != *r.counterexample->rhs);
    CHECK(r.counterexample->status == SampleStatus::disagree);
}

TEST_CASE("deterministic for a fixed seed")
{
    const auto a = to_json(check("1/x - 1/(x+1)", "1/(x*(x+1))", 50, 7)).dump();
    const auto b = to_json(check("1/x - 1/(x+1)", "1/(x*(x+1))", 50, 7)).dump();
    const auto c = to_json(check("1/x - 1/(x+1)", "1/(x*(x+1))", 50, 8)).dump();
    CHECK(a == b);
    CHECK(a != c);
}

TEST_CASE("poles are resampled")
{
    const TransferReport r = check("1/(x - 1) + 1/(x + 1)", "2*x/(x^2 - 1)", 200);
    CHECK(r.holds());
    CHECK(r.count(SampleStatus::inconclusive) == 0);
    for (const auto &s : r.finite_samples) {
        CHECK(s.point.at("x") != make_real(Rational(1)));
        CHECK(s.point.at("x") != make_real(Rational(-1)));
    }
}

TEST_CASE("rejects sqrt and st")
{
    try {
        check("sqrt(x)", "x");
        FAIL("expected an error");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::NonRationalNode);
    }
}

TEST_CASE("constant identities")
{
    CHECK(check("H*eps", "1").holds());
    CHECK_FALSE(check("H*eps", "2").holds());
    CHECK(check("H*eps", "2").counterexample);
}

TEST_CASE("identity corpus")
{
    const auto corpus = read_corpus("identities.txt");
    CHECK(corpus.size() >= 25);
    std::uint64_t seed = 0;
    for (const auto &[lhs, rhs] : corpus) {
        INFO(lhs << " == " << rhs);
        const TransferReport r = check(lhs, rhs, 100, seed++);
        CHECK(r.identity);
        CHECK(r.holds());
        CHECK(r.count(SampleStatus::inconclusive) == 0);
    }
    for (const auto &[lhs, rhs] : read_corpus("non_identities.txt")) {
        INFO(lhs << " == " << rhs);
        const TransferReport r = check(lhs, rhs, 100, seed++);
        CHECK_FALSE(r.identity);
        CHECK(r.counterexample);
    }
}

TEST_CASE("property: differing polynomials have a witness")
{
    Gen g(401);
    for (int i = 0; i < 200; ++i) {
        const Expr p = g.polynomial("x", 3) * g.polynomial("y", 2);
        const Expr q = p + Expr::constant(g.nonzero_rational()) * g.polynomial("x", 2) * Expr::variable("y");
        const TransferReport r = identities_transfer_check(p, q, 20, static_cast<std::uint64_t>(i));
        if (r.identity) {
            continue;
        }
        CHECK(r.counterexample);
    }
}

TEST_CASE("property: canonical identity implies sampled agreement")
{
    Gen g(402);
    for (int i = 0; i < 100; ++i) {
        const Expr a = g.tree({"x", "y"}, 2, false, false);
        const Expr b = g.tree({"x", "y"}, 2, false, false);
        TransferReport r;
        try {
            r = identities_transfer_check((a - b) * (a + b), a * a - b * b, 20, static_cast<std::uint64_t>(i));
        } catch (const Error &e) {
            CHECK(e.kind() == ErrorKind::DivisionByZero);
            continue;
        }
        CHECK(r.identity);
        CHECK(r.count(SampleStatus::disagree) == 0);
    }
}
