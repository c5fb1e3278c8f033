#include <leibniz/gallery.hpp>

#include <algorithm>
#include <sstream>

#include <leibniz/calculus.hpp>
#include <leibniz/dsl/canonical.hpp>
#include <leibniz/dsl/evaluate.hpp>
#include <leibniz/dsl/parser.hpp>
#include <leibniz/error.hpp>

namespace leibniz::gallery
{

using dsl::Expr;

std::vector<Rational> default_grid()
{
    return {-3, -2, -1, 0, 1, 2, 3};
}

namespace
{

std::string pair_str(const Rational &a, const Rational &b)
{
    return "(" + a.str() + ", " + b.str() + ")";
}

bool zero_or_infinitesimal(Classification c)
{
    return c == Classification::zero || c == Classification::infinitesimal;
}

} // namespace

GalleryReport parallel_lines_report(const std::vector<Rational> &xs, int precision)
{
    GalleryReport report(ExampleId::parallel_lines);
    const Expr line = dsl::parse("1 - x/H");
    auto y_at = [&](const Rational &x) { return dsl::evaluate(line, {{"x", make_real(x, precision)}}, precision); };

    for (const auto &x : xs) {
        report.parameters.push_back(x.str());
        const LcNumber y = y_at(x);
        const LcNumber expected = make_real(Rational(1), precision) - make_monomial(x, Rational(1), precision);
        report.check("y = 1 - x/H at x = " + x.str(), y.str(), expected.str());
        report.check("st(x, y) = (st(x), 1) at x = " + x.str(),
                     pair_str(standard_part(make_real(x, precision)), standard_part(y)), pair_str(x, Rational(1)));
    }

    // The line is straight, so any two of its points give the slope.
    const LcNumber slope = y_at(Rational(1)) - y_at(Rational(0));
    report.check("slope of L_H", slope.str(), make_monomial(Rational(-1), Rational(1), precision).str());
    report.check("slope is infinitesimal", classification_name(classify(slope)),
                 classification_name(Classification::infinitesimal));
    report.check("slope is negative", compare(slope, LcNumber(precision)) < 0 ? "negative" : "nonnegative", "negative");

    // y = 0  <=>  x = -y(0) / slope
    const LcNumber intercept = -y_at(Rational(0)) / slope;
    report.check("x-intercept of L_H", intercept.str(), infinite_unit(precision).str());
    report.check("x-intercept is an infinite point", classification_name(classify(intercept)),
                 classification_name(Classification::infinite));
    return report;
}

GalleryReport infinitesimal_equality_report(const Rational &x, int precision)
{
    GalleryReport report(ExampleId::infinitesimal_equality);
    report.parameters.push_back(x.str());

    const LcNumber finite = make_real(Rational(2) * x, precision);
    const LcNumber perturbed = finite + epsilon(precision);
    const std::string at = " at x = " + x.str();

    report.check("2x + dx is infinitely close to 2x" + at, is_infinitely_close(perturbed, finite) ? "true" : "false",
                 "true");
    report.check("2x + dx differs from 2x" + at, perturbed == finite ? "equal" : "unequal", "unequal");
    report.check("the difference is infinitesimal" + at, classification_name(classify(perturbed - finite)),
                 classification_name(Classification::infinitesimal));
    // With x = 0 the leading stratum is dx itself.
    const LcNumber reduced_expected = x.is_zero() ? epsilon(precision) : finite;
    report.check("tlh_reduce(2x + dx)" + at, tlh_reduce(perturbed).str(), reduced_expected.str());

    const LcNumber one = make_real(Rational(1), precision);
    for (const long n : {1L, 10L, 1000L, 1000000L}) {
        const LcNumber scaled = make_real(Rational(n), precision) * (perturbed - finite);
        report.check(std::to_string(n) + " * (difference) < 1" + at, compare(scaled, one) < 0 ? "true" : "false",
                     "true");
    }
    return report;
}

GalleryReport infinitesimal_equality_report(const std::vector<Rational> &xs, int precision)
{
    GalleryReport report(ExampleId::infinitesimal_equality);
    for (const auto &x : xs) {
        report.merge(infinitesimal_equality_report(x, precision));
    }
    return report;
}

ConicChain ConicChain::standard()
{
    ConicChain c;
    c.ellipse = "sqrt(x^2 + y^2) + sqrt(x^2 + (y - H)^2)";
    c.s1 = "x^2 + y^2";
    c.s2 = "x^2 + (y - H)^2";
    c.c = "H + 2";
    c.radical = "R";
    c.squared_lhs = "x^2 + y^2 + x^2 + (H - y)^2 + 2*R";
    c.squared_rhs = "H^2 + 4*H + 4";
    c.isolated_lhs = "2*R";
    c.isolated_rhs = "H^2 + 4*H + 4 - (x^2 + y^2 + x^2 + (H - y)^2)";
    c.final_lhs = "(y + 2 + 2/H)^2 - (x^2 + y^2)*(1 + 4/H + 4/H^2)";
    return c;
}

namespace
{

// Rewrites R^(2j + r) as (square)^j R^r, eliminating even powers of the
// radical indeterminate.
dsl::Polynomial reduce_radical(const dsl::Polynomial &p, std::size_t radical, const dsl::Polynomial &square)
{
    dsl::Polynomial out(p.nvars());
    for (const auto &[m, c] : p.terms()) {
        dsl::Monomial rest = m;
        const unsigned k = rest[radical];
        rest[radical] = k % 2;
        dsl::Polynomial t(p.nvars());
        t.add_term(rest, c);
        out += t * square.pow(k / 2);
    }
    return out;
}

std::string replace_h(std::string s)
{
    std::string out;
    for (const char ch : s) {
        out += ch == 'H' ? std::string("h") : std::string(1, ch);
    }
    return out;
}

} // namespace

ConicChainResult verify_conic_chain(const ConicChain &chain)
{
    GalleryReport report(ExampleId::ellipse_parabola);
    auto claim = [&](const std::string &description, const std::string &computed, const std::string &expected,
                     bool pass) {
        report.check(description, computed, expected, pass);
        if (!pass) {
            throw Error(ErrorKind::ChainBroken, description + ": got " + computed + ", expected " + expected);
        }
    };
    auto step = [&](const std::string &description, const std::string &computed, const std::string &expected) {
        report.check(description, computed, expected);
        if (!report.claims.back().pass) {
            throw Error(ErrorKind::ChainBroken,
                        description + ": got " + computed + ", expected " + expected);
        }
    };

    const Expr s1 = dsl::parse(chain.s1);
    const Expr s2 = dsl::parse(chain.s2);
    const Expr c = dsl::parse(chain.c);
    const Expr r = dsl::parse(chain.radical);
    const Expr squared_lhs = dsl::parse(chain.squared_lhs);
    const Expr squared_rhs = dsl::parse(chain.squared_rhs);
    const Expr isolated_lhs = dsl::parse(chain.isolated_lhs);
    const Expr isolated_rhs = dsl::parse(chain.isolated_rhs);
    const Expr final_lhs = dsl::parse(chain.final_lhs);
    const Expr two = Expr::constant(2);

    const auto vars = dsl::common_variables({s1, s2, c, r, squared_lhs, squared_rhs, isolated_lhs, isolated_rhs, final_lhs});
    auto form = [&](const Expr &e) { return dsl::canonicalize(e, vars); };
    const auto r_name = dsl::free_variables(r);
    if (r_name.size() != 1 || !r.as<dsl::Var>()) {
        throw Error(ErrorKind::ChainBroken, "the radical must be a single indeterminate");
    }
    const auto r_index = static_cast<std::size_t>(
        std::find(vars.begin(), vars.end(), *r_name.begin()) - vars.begin());

    // First squaring: (sqrt S1 + sqrt S2)^2 = S1 + S2 + 2R and C^2.
    step("squaring the left side gives S1 + S2 + 2R", form(squared_lhs).str(), form(s1 + s2 + two * r).str());
    step("squaring the right side gives C^2", form(squared_rhs).str(), form(Expr::power(c, 2)).str());

    // Moving S1 + S2 across.
    step("isolated radical side is 2R", form(isolated_lhs).str(), form(two * r).str());
    step("other side is C^2 - S1 - S2", form(isolated_rhs).str(), form(Expr::power(c, 2) - s1 - s2).str());
    step("isolating the radical rearranges the squared equation",
         form(isolated_lhs - isolated_rhs).str(), form(squared_lhs - squared_rhs).str());

    // Second squaring, with R^2 replaced by S1 S2.
    const dsl::RationalForm second = form(Expr::power(isolated_lhs, 2) - Expr::power(isolated_rhs, 2));
    const dsl::RationalForm radicand = form(s1 * s2);
    if (!second.is_polynomial() || !radicand.is_polynomial()) {
        throw Error(ErrorKind::ChainBroken, "squared chain is not polynomial");
    }
    const dsl::Polynomial squared = reduce_radical(second.numerator(), r_index, radicand.numerator());
    const dsl::Polynomial expected_squared =
        form(Expr::constant(4) * s1 * s2 - Expr::power(Expr::power(c, 2) - s1 - s2, 2)).numerator();
    step("squaring again: 4 S1 S2 - (C^2 - S1 - S2)^2", squared.str(vars), expected_squared.str(vars));
    step("the radical is eliminated", squared.involves(r_index) ? "present" : "absent", "absent");

    // Relating the polynomial to the final form.
    const dsl::RationalForm final_form = form(final_lhs);
    const dsl::RationalForm squared_form(vars, squared, dsl::Polynomial::constant(vars.size(), Rational(1)));
    const dsl::RationalForm cofactor = squared_form / final_form;
    step("cofactor is a polynomial", cofactor.is_polynomial() ? "polynomial" : "not polynomial", "polynomial");
    bool h_only = !cofactor.is_zero();
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] != "H" && cofactor.numerator().involves(i)) {
            h_only = false;
        }
    }
    claim("cofactor (4 S1 S2 - (C^2 - S1 - S2)^2) / final", cofactor.str(), "nonzero polynomial in H", h_only);
    step("4 S1 S2 - (C^2 - S1 - S2)^2 = cofactor * final", (cofactor * final_form).str(), squared_form.str());

    const dsl::RationalForm h_squared = form(Expr::power(Expr::infinite_unit(), 2));
    const dsl::RationalForm cleared = final_form * h_squared;
    if (!cleared.is_polynomial()) {
        throw Error(ErrorKind::ChainBroken, "H^2 times the final form is not a polynomial");
    }
    const auto division = dsl::divide(squared, cleared.numerator());
    const dsl::RationalForm cleared_cofactor(vars, division.quotient, dsl::Polynomial::constant(vars.size(), Rational(1)));
    step("division by H^2 * final leaves zero remainder", division.remainder.str(vars), "0");
    claim("quotient by H^2 * final", cleared_cofactor.str(), "nonzero constant",
          cleared_cofactor.is_polynomial() && division.quotient.is_constant() && !division.quotient.is_zero());

    // The vertex (0, -1) at H = 2: every radicand is a perfect square.
    const dsl::Bindings vertex{{"x", make_real(Rational(0))}, {"y", make_real(Rational(-1))}, {"h", make_real(Rational(2))}};
    const LcNumber ellipse_value =
        dsl::evaluate(dsl::parse(replace_h(chain.ellipse)) - dsl::parse(replace_h(chain.c)), vertex);
    step("vertex (0, -1) lies on the ellipse for H = 2", ellipse_value.str(), "0");
    const LcNumber final_value = dsl::evaluate(dsl::parse(replace_h(chain.final_lhs)), vertex);
    step("vertex (0, -1) satisfies the final form for H = 2", final_value.str(), "0");

    return {report, cofactor.str(), cleared_cofactor.str()};
}

namespace
{

const char *const final_form_source = "(y + 2 + 2/H)^2 - (x^2 + y^2)*(1 + 4/H + 4/H^2)";

Rational parabola_y(const Rational &x0)
{
    return x0 * x0 / Rational(4) - Rational(1);
}

LcNumber final_form_at(const Rational &x0, const Rational &y0, int precision)
{
    static const Expr form = dsl::parse(final_form_source);
    return dsl::evaluate(form, {{"x", make_real(x0, precision)}, {"y", make_real(y0, precision)}}, precision);
}

} // namespace

GalleryReport parabola_shadow_report(const std::vector<Rational> &xs, int precision)
{
    GalleryReport report(ExampleId::ellipse_parabola);
    for (const auto &x0 : xs) {
        report.parameters.push_back(x0.str());
        const Rational y0 = parabola_y(x0);
        const std::string at = " at " + pair_str(x0, y0);
        const LcNumber value = final_form_at(x0, y0, precision);

        // Expanding by hand: with S = x0^2 + y0^2 the eps^0 part cancels on
        // the parabola, leaving (4(y0 + 2) - 4S) eps + (4 - 4S) eps^2.
        const Rational s = x0 * x0 + y0 * y0;
        const LcNumber expanded = LcNumber::from_terms(
            {{Rational(1), Rational(4) * (y0 + Rational(2)) - Rational(4) * s}, {Rational(2), Rational(4) - Rational(4) * s}},
            precision);
        report.check("final form on the parabola" + at, value.str(), expanded.str());
        const auto c = classify(value);
        report.check("value is zero or infinitesimal" + at, classification_name(c), "zero or infinitesimal",
                     zero_or_infinitesimal(c));
        report.check("st(value) = 0" + at, standard_part(value).str(), "0");
        const Rational shadow_equation = (y0 + Rational(2)) * (y0 + Rational(2)) - s;
        report.check("(y0 + 2)^2 - (x0^2 + y0^2) = 0" + at, shadow_equation.str(), "0");

        const Rational y1 = y0 + Rational(1);
        const Rational off = (y1 + Rational(2)) * (y1 + Rational(2)) - (x0 * x0 + y1 * y1);
        const Rational off_shadow = standard_part(final_form_at(x0, y1, precision));
        report.check("st(value) at y0 + 1 equals (y + 2)^2 - (x^2 + y^2)" + at, off_shadow.str(), off.str());
        report.check("st(value) at y0 + 1 is nonzero" + at, off_shadow.is_zero() ? "zero" : "nonzero", "nonzero");
    }
    return report;
}

std::string parabola_csv(const std::vector<Rational> &xs, int precision)
{
    std::ostringstream out;
    out << "x0,y0,st_of_lhs\n";
    for (const auto &x0 : xs) {
        const Rational y0 = parabola_y(x0);
        out << x0 << "," << y0 << "," << standard_part(final_form_at(x0, y0, precision)) << "\n";
    }
    return out.str();
}

GalleryReport ellipse_parabola_report(const std::vector<Rational> &xs, int precision)
{
    GalleryReport report = verify_conic_chain().report;
    report.merge(parabola_shadow_report(xs, precision));
    return report;
}

GalleryReport product_rule_gallery(int precision)
{
    const Expr x = dsl::parse("x");
    GalleryReport report(ExampleId::product_rule);
    report.merge(calculus::product_rule_report(x, dsl::parse("x^2"), "x", Rational(1), {}, precision));
    report.merge(calculus::product_rule_report(x, dsl::parse("3"), "x", Rational(2), {}, precision));
    report.merge(calculus::scaled_product_report(Rational(2), dsl::parse("x^2 - 3*x + 1"), "x", Rational(3, 2), {}, precision));
    return report;
}

GalleryReport run_example(ExampleId id, int precision)
{
    switch (id) {
        case ExampleId::parallel_lines:
            return parallel_lines_report(default_grid(), precision);
        case ExampleId::infinitesimal_equality:
            return infinitesimal_equality_report(default_grid(), precision);
        case ExampleId::ellipse_parabola:
            return ellipse_parabola_report(default_grid(), precision);
        case ExampleId::product_rule:
            return product_rule_gallery(precision);
    }
    throw std::invalid_argument("unknown example");
}

} // namespace leibniz::gallery
