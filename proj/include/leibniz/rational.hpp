#ifndef LEIBNIZ_RATIONAL_HPP
#define LEIBNIZ_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace leibniz
{

// Exact rational number, always in lowest terms with a positive denominator.
class Rational
{
public:
    Rational() = default;
    Rational(long n) : m_value(n) {}
    Rational(int n) : m_value(static_cast<long>(n)) {}
    Rational(long num, long den);
    explicit Rational(const mpq_class &q);
    explicit Rational(const mpz_class &z) : m_value(z) {}

    // Accepts "p", "p/q" and "d.ddd" (exact decimal), with optional sign.
    static std::optional<Rational> parse(std::string_view text);
    static Rational from_string(std::string_view text);

    const mpq_class &get() const
    {
        return m_value;
    }
    mpz_class numerator() const
    {
        return m_value.get_num();
    }
    mpz_class denominator() const
    {
        return m_value.get_den();
    }

    int sign() const
    {
        return sgn(m_value);
    }
    bool is_zero() const
    {
        return sign() == 0;
    }
    bool is_integer() const
    {
        return m_value.get_den() == 1;
    }
    // Only meaningful when is_integer() and the value fits.
    std::optional<long> to_long() const;

    Rational abs() const;
    Rational inverse() const;
    // Exact square root if the value is the square of a rational.
    std::optional<Rational> exact_sqrt() const;
    Rational pow(long exponent) const;

    // "p" when the denominator is 1, "p/q" otherwise.
    std::string str() const;

    Rational operator-() const;
    Rational &operator+=(const Rational &o);
    Rational &operator-=(const Rational &o);
    Rational &operator*=(const Rational &o);
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b)
    {
        return a += b;
    }
    friend Rational operator-(Rational a, const Rational &b)
    {
        return a -= b;
    }
    friend Rational operator*(Rational a, const Rational &b)
    {
        return a *= b;
    }
    friend Rational operator/(Rational a, const Rational &b)
    {
        return a /= b;
    }

    friend bool operator==(const Rational &a, const Rational &b)
    {
        return a.m_value == b.m_value;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.m_value, b.m_value);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    std::size_t hash() const;

private:
    mpq_class m_value;
};

std::ostream &operator<<(std::ostream &os, const Rational &q);

} // namespace leibniz

template <>
struct std::hash<leibniz::Rational> {
    std::size_t operator()(const leibniz::Rational &q) const
    {
        return q.hash();
    }
};

#endif
