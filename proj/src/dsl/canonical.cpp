#include <leibniz/dsl/canonical.hpp>

#include <algorithm>
#include <stdexcept>

#include <leibniz/error.hpp>

namespace leibniz::dsl
{

std::vector<std::string> ordered_variables(std::vector<std::string> names)
{
    std::sort(names.begin(), names.end(), [](const std::string &a, const std::string &b) {
        if ((a == "H") != (b == "H")) {
            return b == "H";
        }
        return a < b;
    });
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
}

RationalForm::RationalForm(std::vector<std::string> variables, Polynomial numerator, Polynomial denominator)
    : m_variables(std::move(variables)), m_numerator(std::move(numerator)), m_denominator(std::move(denominator))
{
    if (m_denominator.is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
    }
    if (!m_numerator.is_zero()) {
        const Polynomial g = gcd(m_numerator, m_denominator);
        if (!g.is_constant()) {
            m_numerator = exact_quotient(m_numerator, g);
            m_denominator = exact_quotient(m_denominator, g);
        }
    }
    normalize();
}

RationalForm RationalForm::coprime(std::vector<std::string> variables, Polynomial numerator, Polynomial denominator)
{
    RationalForm f = constant(std::move(variables), Rational(0));
    f.m_numerator = std::move(numerator);
    f.m_denominator = std::move(denominator);
    if (f.m_denominator.is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
    }
    f.normalize();
    return f;
}

void RationalForm::normalize()
{
    if (m_numerator.is_zero()) {
        m_denominator = Polynomial::constant(m_variables.size(), Rational(1));
        return;
    }
    const Rational scale = m_denominator.leading_coefficient().inverse();
    m_numerator = m_numerator * scale;
    m_denominator = m_denominator * scale;
}

RationalForm RationalForm::constant(std::vector<std::string> variables, const Rational &c)
{
    const std::size_t n = variables.size();
    return RationalForm(std::move(variables), Polynomial::constant(n, c), Polynomial::constant(n, Rational(1)));
}

std::string RationalForm::str() const
{
    if (m_denominator.is_constant()) {
        return m_numerator.str(m_variables);
    }
    return "(" + m_numerator.str(m_variables) + ") / (" + m_denominator.str(m_variables) + ")";
}

RationalForm RationalForm::operator-() const
{
    return coprime(m_variables, -m_numerator, m_denominator);
}

namespace
{

void require_same_variables(const RationalForm &a, const RationalForm &b)
{
    if (a.variables() != b.variables()) {
        throw std::invalid_argument("rational forms over different variables");
    }
}

} // namespace

// The operations below keep their operands' coprimality in view, so the
// gcds they take are of the smaller pieces only.

RationalForm operator+(const RationalForm &a, const RationalForm &b)
{
    require_same_variables(a, b);
    const Polynomial g = gcd(a.m_denominator, b.m_denominator);
    if (g.is_constant()) {
        return RationalForm::coprime(a.m_variables, a.m_numerator * b.m_denominator + b.m_numerator * a.m_denominator,
                                     a.m_denominator * b.m_denominator);
    }
    const Polynomial da = exact_quotient(a.m_denominator, g);
    const Polynomial db = exact_quotient(b.m_denominator, g);
    Polynomial t = a.m_numerator * db + b.m_numerator * da;
    if (t.is_zero()) {
        return RationalForm::constant(a.m_variables, Rational(0));
    }
    const Polynomial h = gcd(t, g);
    return RationalForm::coprime(a.m_variables, exact_quotient(t, h), da * exact_quotient(b.m_denominator, h));
}

RationalForm operator-(const RationalForm &a, const RationalForm &b)
{
    return a + (-b);
}

RationalForm operator*(const RationalForm &a, const RationalForm &b)
{
    require_same_variables(a, b);
    if (a.is_zero() || b.is_zero()) {
        return RationalForm::constant(a.m_variables, Rational(0));
    }
    const Polynomial g1 = gcd(a.m_numerator, b.m_denominator);
    const Polynomial g2 = gcd(b.m_numerator, a.m_denominator);
    return RationalForm::coprime(a.m_variables,
                                 exact_quotient(a.m_numerator, g1) * exact_quotient(b.m_numerator, g2),
                                 exact_quotient(a.m_denominator, g2) * exact_quotient(b.m_denominator, g1));
}

RationalForm operator/(const RationalForm &a, const RationalForm &b)
{
    require_same_variables(a, b);
    if (b.is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "division by a rational function that is identically zero");
    }
    return a * RationalForm::coprime(b.m_variables, b.m_denominator, b.m_numerator);
}

RationalForm RationalForm::pow(long exponent) const
{
    if (exponent < 0) {
        if (is_zero()) {
            throw Error(ErrorKind::DivisionByZero, "negative power of a rational function that is identically zero");
        }
        return coprime(m_variables, m_denominator.pow(static_cast<unsigned>(-exponent)),
                       m_numerator.pow(static_cast<unsigned>(-exponent)));
    }
    return coprime(m_variables, m_numerator.pow(static_cast<unsigned>(exponent)),
                   m_denominator.pow(static_cast<unsigned>(exponent)));
}

namespace
{

bool uses_h(const Expr &e)
{
    return std::visit(overloaded{
                          [](const Eps &) { return true; },
                          [](const HUnit &) { return true; },
                          [](const Add &x) { return uses_h(x.lhs) || uses_h(x.rhs); },
                          [](const Sub &x) { return uses_h(x.lhs) || uses_h(x.rhs); },
                          [](const Mul &x) { return uses_h(x.lhs) || uses_h(x.rhs); },
                          [](const Div &x) { return uses_h(x.lhs) || uses_h(x.rhs); },
                          [](const Pow &x) { return uses_h(x.base); },
                          [](const Sqrt &x) { return uses_h(x.arg); },
                          [](const St &x) { return uses_h(x.arg); },
                          [](const Neg &x) { return uses_h(x.arg); },
                          [](const auto &) { return false; },
                      },
                      e.node().kind);
}

class Canonicalizer
{
public:
    explicit Canonicalizer(std::vector<std::string> variables) : m_variables(std::move(variables)) {}

    RationalForm run(const Expr &e) const
    {
        const auto pos = e.position();
        return std::visit(
            overloaded{
                [&](const Const &x) { return RationalForm::constant(m_variables, x.value); },
                [&](const Var &x) { return indeterminate(x.name, pos); },
                [&](const HUnit &) { return indeterminate("H", pos); },
                [&](const Eps &) { return RationalForm::constant(m_variables, Rational(1)) / indeterminate("H", pos); },
                [&](const Add &x) { return run(x.lhs) + run(x.rhs); },
                [&](const Sub &x) { return run(x.lhs) - run(x.rhs); },
                [&](const Mul &x) { return run(x.lhs) * run(x.rhs); },
                [&](const Div &x) {
                    const RationalForm num = run(x.lhs);
                    const RationalForm den = run(x.rhs);
                    if (den.is_zero()) {
                        throw Error(ErrorKind::DivisionByZero, "divisor is identically zero", pos);
                    }
                    return num / den;
                },
                [&](const Pow &x) {
                    const RationalForm base = run(x.base);
                    if (x.exponent < 0 && base.is_zero()) {
                        throw Error(ErrorKind::DivisionByZero, "negative power of zero", pos);
                    }
                    return base.pow(x.exponent);
                },
                [&](const Neg &x) { return -run(x.arg); },
                [&](const Sqrt &) -> RationalForm {
                    throw Error(ErrorKind::NonRationalNode, "sqrt is not a rational operation", pos);
                },
                [&](const St &) -> RationalForm {
                    throw Error(ErrorKind::NonRationalNode, "st is not a rational operation", pos);
                },
            },
            e.node().kind);
    }

private:
    RationalForm indeterminate(const std::string &name, std::size_t pos) const
    {
        const auto it = std::find(m_variables.begin(), m_variables.end(), name);
        if (it == m_variables.end()) {
            throw Error(ErrorKind::UnknownVariable, "'" + name + "' is not a declared variable", pos);
        }
        const std::size_t n = m_variables.size();
        return RationalForm(m_variables, Polynomial::variable(n, static_cast<std::size_t>(it - m_variables.begin())),
                            Polynomial::constant(n, Rational(1)));
    }

    std::vector<std::string> m_variables;
};

} // namespace

RationalForm canonicalize(const Expr &e, const std::vector<std::string> &variables)
{
    std::vector<std::string> names = variables;
    if (uses_h(e)) {
        names.push_back("H");
    }
    return Canonicalizer(ordered_variables(std::move(names))).run(e);
}

RationalForm canonicalize(const Expr &e)
{
    return canonicalize(e, common_variables({e}));
}

std::vector<std::string> common_variables(const std::vector<Expr> &exprs)
{
    std::vector<std::string> names;
    for (const auto &e : exprs) {
        for (const auto &v : free_variables(e)) {
            names.push_back(v);
        }
        if (uses_h(e)) {
            names.push_back("H");
        }
    }
    return ordered_variables(std::move(names));
}

} // namespace leibniz::dsl
