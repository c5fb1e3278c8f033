#ifndef LEIBNIZ_REPORT_HPP
#define LEIBNIZ_REPORT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace leibniz
{

enum class ExampleId { parallel_lines, infinitesimal_equality, ellipse_parabola, product_rule };

const char *example_name(ExampleId id);
std::optional<ExampleId> parse_example_id(std::string_view name);

struct Claim {
    std::string description;
    std::string computed;
    std::string expected;
    bool pass = false;
};

// Verification record for one worked example: each claim compares a
// computed value against the expected one, both serialized exactly.
struct GalleryReport {
    ExampleId example;
    std::vector<std::string> parameters;
    std::vector<Claim> claims;

    explicit GalleryReport(ExampleId id) : example(id) {}

    bool pass() const;
    const Claim *first_failure() const;

    void check(std::string description, std::string computed, std::string expected);
    void check(std::string description, std::string computed, std::string expected, bool pass);
    // Appends the claims and parameters of another report.
    void merge(const GalleryReport &other);

    std::string text() const;
};

} // namespace leibniz

#endif
