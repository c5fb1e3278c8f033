#ifndef LEIBNIZ_DSL_CANONICAL_HPP
#define LEIBNIZ_DSL_CANONICAL_HPP

#include <string>
#include <vector>

#include <leibniz/dsl/expr.hpp>
#include <leibniz/dsl/polynomial.hpp>

namespace leibniz::dsl
{

// Alphabetical, except that H is always the last indeterminate. Duplicates
// are removed.
std::vector<std::string> ordered_variables(std::vector<std::string> names);

// numerator / denominator in lowest terms with a monic denominator, so two
// rational functions are equal iff their forms are equal.
class RationalForm
{
public:
    RationalForm(std::vector<std::string> variables, Polynomial numerator, Polynomial denominator);

    static RationalForm constant(std::vector<std::string> variables, const Rational &c);

    const std::vector<std::string> &variables() const
    {
        return m_variables;
    }
    const Polynomial &numerator() const
    {
        return m_numerator;
    }
    const Polynomial &denominator() const
    {
        return m_denominator;
    }
    bool is_zero() const
    {
        return m_numerator.is_zero();
    }
    bool is_polynomial() const
    {
        return m_denominator.is_constant();
    }

    std::string str() const;

    RationalForm operator-() const;
    friend RationalForm operator+(const RationalForm &a, const RationalForm &b);
    friend RationalForm operator-(const RationalForm &a, const RationalForm &b);
    friend RationalForm operator*(const RationalForm &a, const RationalForm &b);
    // Throws Error{DivisionByZero} for a zero divisor.
    friend RationalForm operator/(const RationalForm &a, const RationalForm &b);
    RationalForm pow(long exponent) const;

    friend bool operator==(const RationalForm &a, const RationalForm &b) = default;

private:
    // numerator and denominator already coprime
    static RationalForm coprime(std::vector<std::string> variables, Polynomial numerator, Polynomial denominator);
    void normalize();

    std::vector<std::string> m_variables;
    Polynomial m_numerator;
    Polynomial m_denominator;
};

// Exact rational-function normal form of a Sqrt/St-free expression over the
// given variables (H is added when the expression uses H or eps; eps is
// read as 1/H). Throws NonRationalNode, UnknownVariable or DivisionByZero.
RationalForm canonicalize(const Expr &e, const std::vector<std::string> &variables);
RationalForm canonicalize(const Expr &e);

// Variable list covering every expression given, in canonical order.
std::vector<std::string> common_variables(const std::vector<Expr> &exprs);

} // namespace leibniz::dsl

#endif
