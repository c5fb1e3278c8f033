#include <leibniz/serialize.hpp>

#include <stdexcept>

namespace leibniz
{

using nlohmann::json;

json to_json(const LcNumber &x)
{
    json terms = json::array();
    for (const auto &t : x.terms()) {
        terms.push_back({{"exp", t.exponent.str()}, {"coef", t.coefficient.str()}});
    }
    json j = {{"terms", std::move(terms)}, {"precision", x.precision()}};
    if (x.horizon()) {
        j["order"] = x.horizon()->str();
    }
    return j;
}

LcNumber lc_number_from_json(const json &j)
{
    std::vector<LcNumber::Term> terms;
    for (const auto &t : j.at("terms")) {
        terms.push_back({Rational::from_string(t.at("exp").get<std::string>()),
                         Rational::from_string(t.at("coef").get<std::string>())});
    }
    std::optional<Rational> horizon;
    if (j.contains("order")) {
        horizon = Rational::from_string(j.at("order").get<std::string>());
    }
    return LcNumber::from_terms(std::move(terms), j.at("precision").get<int>(), std::move(horizon));
}

json to_json(const GalleryReport &report)
{
    json claims = json::array();
    for (const auto &c : report.claims) {
        claims.push_back(
            {{"description", c.description}, {"computed", c.computed}, {"expected", c.expected}, {"pass", c.pass}});
    }
    return {{"example", example_name(report.example)},
            {"parameters", report.parameters},
            {"claims", std::move(claims)},
            {"pass", report.pass()}};
}

json to_json(const calculus::DiffResult &result)
{
    return {{"quotient", to_json(result.quotient())},
            {"shadow", result.shadow().str()},
            {"superfluous", to_json(result.discarded())}};
}

json to_json(const dsl::TransferSample &sample)
{
    json point = json::object();
    for (const auto &[name, value] : sample.point) {
        point[name] = value.str();
    }
    json j = {{"index", sample.index}, {"point", std::move(point)}, {"status", dsl::sample_status_name(sample.status)}};
    j["lhs"] = sample.lhs ? json(sample.lhs->str()) : json(nullptr);
    j["rhs"] = sample.rhs ? json(sample.rhs->str()) : json(nullptr);
    return j;
}

json to_json(const dsl::TransferReport &report)
{
    json finite = json::array();
    for (const auto &s : report.finite_samples) {
        finite.push_back(to_json(s));
    }
    json infinite = json::array();
    for (const auto &s : report.infinite_samples) {
        infinite.push_back(to_json(s));
    }
    return {{"identity", report.identity},
            {"finite_samples", std::move(finite)},
            {"infinite_samples", std::move(infinite)},
            {"counterexample", report.counterexample ? to_json(*report.counterexample) : json(nullptr)},
            {"seed", report.seed}};
}

} // namespace leibniz
