#ifndef LEIBNIZ_LC_NUMBER_HPP
#define LEIBNIZ_LC_NUMBER_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include <leibniz/error.hpp>
#include <leibniz/rational.hpp>

namespace leibniz
{

inline constexpr int default_precision = 16;

enum class Classification { zero, infinitesimal, appreciable, infinite };

const char *classification_name(Classification c);

// A left-finite truncated series sum(c_i * eps^e_i) with exact rational
// coefficients and rational exponents, eps being the canonical positive
// infinitesimal.
//
// Truncation is relative: only exponents below leading_exponent + precision
// are retained. Every value also carries a horizon, the absolute exponent
// below which its stored terms are known to be correct. Values that never
// lost a term are exact (no horizon). The horizon is what lets two
// differently-truncated computations of the same quantity be compared.
class LcNumber
{
public:
    struct Term {
        Rational exponent;
        Rational coefficient;

        friend bool operator==(const Term &, const Term &) = default;
    };

    // Exact zero.
    explicit LcNumber(int precision = default_precision);

    // Builds a normalized series: terms are sorted, merged, zero
    // coefficients removed, and everything at or beyond the horizon or the
    // relative window dropped.
    static LcNumber from_terms(std::vector<Term> terms, int precision = default_precision,
                               std::optional<Rational> horizon = std::nullopt);

    const std::vector<Term> &terms() const
    {
        return m_terms;
    }
    int precision() const
    {
        return m_precision;
    }
    const std::optional<Rational> &horizon() const
    {
        return m_horizon;
    }
    bool is_exact() const
    {
        return !m_horizon.has_value();
    }
    bool is_zero() const
    {
        return m_terms.empty();
    }

    // Undefined for zero (leading exponent +inf by convention).
    std::optional<Rational> leading_exponent() const;
    Rational leading_coefficient() const;
    Rational coefficient(const Rational &exponent) const;

    // Same value, re-truncated to a different relative window.
    LcNumber with_precision(int precision) const;

    // "q0 + q1·eps^r1 + ..." in ascending exponent order; "0" for zero.
    // Inexact values end with " + O(eps^h)".
    std::string str() const;

    LcNumber operator-() const;
    friend LcNumber operator+(const LcNumber &a, const LcNumber &b);
    friend LcNumber operator-(const LcNumber &a, const LcNumber &b);
    friend LcNumber operator*(const LcNumber &a, const LcNumber &b);
    friend LcNumber operator/(const LcNumber &a, const LcNumber &b);

    // Structural equality: same terms and same horizon.
    friend bool operator==(const LcNumber &a, const LcNumber &b);
    // Order of the extended continuum.
    friend std::strong_ordering operator<=>(const LcNumber &a, const LcNumber &b);

private:
    LcNumber(std::vector<Term> terms, int precision, std::optional<Rational> horizon);

    std::vector<Term> m_terms;
    int m_precision;
    std::optional<Rational> m_horizon;
};

LcNumber make_real(const Rational &q, int precision = default_precision);
LcNumber make_monomial(const Rational &coefficient, const Rational &exponent, int precision = default_precision);
LcNumber epsilon(int precision = default_precision);
// H = 1/eps, the canonical infinite quantity.
LcNumber infinite_unit(int precision = default_precision);

LcNumber add(const LcNumber &a, const LcNumber &b);
LcNumber neg(const LcNumber &a);
LcNumber mul(const LcNumber &a, const LcNumber &b);
// Throws DivisionByZero for a zero argument.
LcNumber inverse(const LcNumber &a);
LcNumber pow(const LcNumber &a, long exponent);
// Zero maps to exact zero. Throws NegativeLeadingCoefficient when the
// leading coefficient is negative and IrrationalRoot when it is not the
// square of a rational.
LcNumber sqrt(const LcNumber &a);

std::strong_ordering compare(const LcNumber &a, const LcNumber &b);
Classification classify(const LcNumber &a);
bool is_finite(const LcNumber &a);

// The coefficient of eps^0. Throws InfiniteOperand for infinite input.
Rational standard_part(const LcNumber &a);

// a - b is zero or infinitesimal.
bool is_infinitely_close(const LcNumber &a, const LcNumber &b);

// Keeps only the leading term: every term infinitely small relative to the
// leading one is discarded, so a + dx reduces to a.
LcNumber tlh_reduce(const LcNumber &a);

// True when a and b coincide on every exponent both of them know, i.e.
// below the smaller of the two horizons.
bool agrees(const LcNumber &a, const LcNumber &b);

} // namespace leibniz

#endif
