#include <leibniz/rational.hpp>

#include <cctype>
#include <stdexcept>

namespace leibniz
{

Rational::Rational(long num, long den) : m_value(num, den)
{
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    m_value.canonicalize();
}

Rational::Rational(const mpq_class &q) : m_value(q)
{
    m_value.canonicalize();
}

namespace
{

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (const char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

std::optional<Rational> Rational::parse(std::string_view text)
{
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    mpq_class value;
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            return std::nullopt;
        }
        mpz_class d(std::string(den), 10);
        if (d == 0) {
            return std::nullopt;
        }
        value = mpq_class(mpz_class(std::string(num), 10), d);
    } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const auto whole = text.substr(0, dot);
        const auto frac = text.substr(dot + 1);
        if (!all_digits(whole) || !all_digits(frac)) {
            return std::nullopt;
        }
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        value = mpq_class(mpz_class(std::string(whole) + std::string(frac), 10), scale);
    } else {
        if (!all_digits(text)) {
            return std::nullopt;
        }
        value = mpq_class(mpz_class(std::string(text), 10));
    }
    value.canonicalize();
    if (negative) {
        value = -value;
    }
    return Rational(value);
}

Rational Rational::from_string(std::string_view text)
{
    auto q = parse(text);
    if (!q) {
        throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    }
    return *q;
}

std::optional<long> Rational::to_long() const
{
    if (!is_integer() || !m_value.get_num().fits_slong_p()) {
        return std::nullopt;
    }
    return m_value.get_num().get_si();
}

Rational Rational::abs() const
{
    return Rational(mpq_class(::abs(m_value)));
}

Rational Rational::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("inverse of zero rational");
    }
    return Rational(mpq_class(1 / m_value));
}

std::optional<Rational> Rational::exact_sqrt() const
{
    if (sign() < 0) {
        return std::nullopt;
    }
    const mpz_class &n = m_value.get_num();
    const mpz_class &d = m_value.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
        return std::nullopt;
    }
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(mpq_class(rn, rd));
}

Rational Rational::pow(long exponent) const
{
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), m_value.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), m_value.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(mpq_class(num, den));
}

std::string Rational::str() const
{
    if (is_integer()) {
        return m_value.get_num().get_str();
    }
    return m_value.get_num().get_str() + "/" + m_value.get_den().get_str();
}

Rational Rational::operator-() const
{
    Rational r;
    r.m_value = -m_value;
    return r;
}

Rational &Rational::operator+=(const Rational &o)
{
    m_value += o.m_value;
    return *this;
}

Rational &Rational::operator-=(const Rational &o)
{
    m_value -= o.m_value;
    return *this;
}

Rational &Rational::operator*=(const Rational &o)
{
    m_value *= o.m_value;
    return *this;
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    m_value /= o.m_value;
    return *this;
}

std::size_t Rational::hash() const
{
    const std::size_t h1 = std::hash<std::string>{}(m_value.get_num().get_str(16));
    const std::size_t h2 = std::hash<std::string>{}(m_value.get_den().get_str(16));
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

std::ostream &operator<<(std::ostream &os, const Rational &q)
{
    return os << q.str();
}

} // namespace leibniz
