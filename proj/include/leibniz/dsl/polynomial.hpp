#ifndef LEIBNIZ_DSL_POLYNOMIAL_HPP
#define LEIBNIZ_DSL_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <leibniz/rational.hpp>

namespace leibniz::dsl
{

using Monomial = std::vector<unsigned>;

// Graded lexicographic order, variable 0 most significant. Sorts the larger
// monomial first so the leading term is begin().
struct GradedLexGreater {
    bool operator()(const Monomial &a, const Monomial &b) const;
};

// Sparse multivariate polynomial with rational coefficients over a fixed
// number of indeterminates, identified by index.
class Polynomial
{
public:
    using TermMap = std::map<Monomial, Rational, GradedLexGreater>;

    explicit Polynomial(std::size_t nvars = 0) : m_nvars(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational &c);
    static Polynomial variable(std::size_t nvars, std::size_t index);

    std::size_t nvars() const
    {
        return m_nvars;
    }
    const TermMap &terms() const
    {
        return m_terms;
    }
    bool is_zero() const
    {
        return m_terms.empty();
    }
    bool is_constant() const;
    // Leading term under the graded lex order. Requires a nonzero polynomial.
    const std::pair<const Monomial, Rational> &leading_term() const
    {
        return *m_terms.begin();
    }
    Rational leading_coefficient() const
    {
        return is_zero() ? Rational(0) : leading_term().second;
    }

    unsigned degree_in(std::size_t var) const;
    // Coefficient of var^k, as a polynomial with var absent.
    Polynomial coefficient_in(std::size_t var, unsigned k) const;
    bool involves(std::size_t var) const
    {
        return degree_in(var) > 0;
    }

    // Divides by the leading coefficient; zero stays zero.
    Polynomial monic() const;

    Rational evaluate(const std::vector<Rational> &point) const;

    // Human-readable form with the given variable names, leading term first.
    std::string str(const std::vector<std::string> &names) const;

    void add_term(const Monomial &m, const Rational &c);

    Polynomial operator-() const;
    Polynomial &operator+=(const Polynomial &o);
    Polynomial &operator-=(const Polynomial &o);
    friend Polynomial operator+(Polynomial a, const Polynomial &b)
    {
        return a += b;
    }
    friend Polynomial operator-(Polynomial a, const Polynomial &b)
    {
        return a -= b;
    }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator*(Polynomial a, const Rational &c);
    Polynomial pow(unsigned exponent) const;

    friend bool operator==(const Polynomial &a, const Polynomial &b)
    {
        return a.m_nvars == b.m_nvars && a.m_terms == b.m_terms;
    }

private:
    std::size_t m_nvars;
    TermMap m_terms;
};

struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
};

// Multivariate division by a single divisor under the graded lex order.
// The remainder is zero exactly when divisor divides dividend.
DivisionResult divide(const Polynomial &dividend, const Polynomial &divisor);

// Exact division; throws std::domain_error when the remainder is nonzero.
Polynomial exact_quotient(const Polynomial &dividend, const Polynomial &divisor);

// Monic greatest common divisor (gcd(0, 0) = 0).
Polynomial gcd(const Polynomial &a, const Polynomial &b);

} // namespace leibniz::dsl

#endif
