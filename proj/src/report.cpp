#include <leibniz/report.hpp>

#include <algorithm>

namespace leibniz
{

const char *example_name(ExampleId id)
{
    switch (id) {
        case ExampleId::parallel_lines:
            return "parallel_lines";
        case ExampleId::infinitesimal_equality:
            return "infinitesimal_equality";
        case ExampleId::ellipse_parabola:
            return "ellipse_parabola";
        case ExampleId::product_rule:
            return "product_rule";
    }
    return "?";
}

std::optional<ExampleId> parse_example_id(std::string_view name)
{
    for (const auto id : {ExampleId::parallel_lines, ExampleId::infinitesimal_equality, ExampleId::ellipse_parabola,
                          ExampleId::product_rule}) {
        if (name == example_name(id)) {
            return id;
        }
    }
    return std::nullopt;
}

bool GalleryReport::pass() const
{
    return std::all_of(claims.begin(), claims.end(), [](const Claim &c) { return c.pass; });
}

const Claim *GalleryReport::first_failure() const
{
    const auto it = std::find_if(claims.begin(), claims.end(), [](const Claim &c) { return !c.pass; });
    return it == claims.end() ? nullptr : &*it;
}

void GalleryReport::check(std::string description, std::string computed, std::string expected)
{
    const bool ok = computed == expected;
    claims.push_back({std::move(description), std::move(computed), std::move(expected), ok});
}

void GalleryReport::check(std::string description, std::string computed, std::string expected, bool ok)
{
    claims.push_back({std::move(description), std::move(computed), std::move(expected), ok});
}

void GalleryReport::merge(const GalleryReport &other)
{
    parameters.insert(parameters.end(), other.parameters.begin(), other.parameters.end());
    claims.insert(claims.end(), other.claims.begin(), other.claims.end());
}

std::string GalleryReport::text() const
{
    std::string out = std::string("example: ") + example_name(example) + "\n";
    if (!parameters.empty()) {
        out += "parameters:";
        for (const auto &p : parameters) {
            out += " " + p;
        }
        out += "\n";
    }
    for (const auto &c : claims) {
        out += std::string(c.pass ? "  [pass] " : "  [FAIL] ") + c.description + "\n";
        out += "         computed: " + c.computed + "\n";
        out += "         expected: " + c.expected + "\n";
    }
    out += std::string("result: ") + (pass() ? "pass" : "FAIL") + "\n";
    return out;
}

} // namespace leibniz
