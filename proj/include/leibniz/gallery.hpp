#ifndef LEIBNIZ_GALLERY_HPP
#define LEIBNIZ_GALLERY_HPP

#include <string>
#include <vector>

#include <leibniz/lc_number.hpp>
#include <leibniz/report.hpp>

namespace leibniz::gallery
{

// {-3, -2, -1, 0, 1, 2, 3}
std::vector<Rational> default_grid();

// Line through (0, 1) with x-intercept H: y = 1 - x/H. Its slope is -eps,
// every finite point has shadow (st x, 1), and it meets the x-axis at H.
GalleryReport parallel_lines_report(const std::vector<Rational> &xs, int precision = default_precision);

// A segment of length 2x + dx against one of length 2x.
GalleryReport infinitesimal_equality_report(const Rational &x, int precision = default_precision);
GalleryReport infinitesimal_equality_report(const std::vector<Rational> &xs, int precision = default_precision);

// The ellipse with foci (0, 0), (0, H) through the vertex (0, -1), written
// as equations over x, y, H. Each string is a DSL expression; `radical` is
// the opaque indeterminate standing for sqrt(S1 * S2).
struct ConicChain {
    std::string ellipse;      // sqrt(S1) + sqrt(S2), equal to c
    std::string s1;           // x^2 + y^2
    std::string s2;           // x^2 + (y - H)^2
    std::string c;            // H + 2
    std::string radical;      // R, with R^2 = S1 * S2
    std::string squared_lhs;  // left side after the first squaring
    std::string squared_rhs;  // right side after the first squaring
    std::string isolated_lhs; // radical term moved to one side
    std::string isolated_rhs;
    std::string final_lhs; // the parabola-limit form, = 0

    static ConicChain standard();
};

struct ConicChainResult {
    GalleryReport report;
    // q with 4 S1 S2 - (C^2 - S1 - S2)^2 = q * final_lhs; a polynomial in H.
    std::string cofactor;
    // The same relation against H^2 * final_lhs (the cleared form).
    std::string cleared_cofactor;
};

// Verifies the squaring chain symbolically with the canonicalizer. Throws
// Error{ChainBroken} naming the first step that does not hold.
ConicChainResult verify_conic_chain(const ConicChain &chain = ConicChain::standard());

// Evaluates final_lhs on the parabola y0 = x0^2/4 - 1 with H infinite: the
// value is infinitesimal with zero shadow, while y0 + 1 gives a nonzero one.
GalleryReport parabola_shadow_report(const std::vector<Rational> &xs, int precision = default_precision);

// "x0,y0,st_of_lhs" rows with a header line.
std::string parabola_csv(const std::vector<Rational> &xs, int precision = default_precision);

// Chain plus shadow claims under the ellipse_parabola id.
GalleryReport ellipse_parabola_report(const std::vector<Rational> &xs, int precision = default_precision);

GalleryReport product_rule_gallery(int precision = default_precision);

GalleryReport run_example(ExampleId id, int precision = default_precision);

} // namespace leibniz::gallery

#endif
