#include <leibniz/lc_number.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

namespace leibniz
{

using Term = LcNumber::Term;
using Terms = std::vector<Term>;

const char *classification_name(Classification c)
{
    switch (c) {
        case Classification::zero:
            return "zero";
        case Classification::infinitesimal:
            return "infinitesimal";
        case Classification::appreciable:
            return "appreciable";
        case Classification::infinite:
            return "infinite";
    }
    return "?";
}

namespace
{

std::optional<Rational> min_horizon(const std::optional<Rational> &a, const std::optional<Rational> &b)
{
    if (!a) {
        return b;
    }
    if (!b) {
        return a;
    }
    return std::min(*a, *b);
}

void check_precision(int precision)
{
    if (precision < 1) {
        throw std::invalid_argument("series precision must be positive");
    }
}

// Sorted, merged, zero-free.
Terms canonical_terms(Terms terms)
{
    std::sort(terms.begin(), terms.end(), [](const Term &x, const Term &y) { return x.exponent < y.exponent; });
    Terms out;
    out.reserve(terms.size());
    for (auto &t : terms) {
        if (!out.empty() && out.back().exponent == t.exponent) {
            out.back().coefficient += t.coefficient;
        } else {
            out.push_back(std::move(t));
        }
        if (out.back().coefficient.is_zero()) {
            out.pop_back();
        }
    }
    return out;
}

// Product of two sorted term lists restricted to exponents below `cut`.
// Sets `dropped` if a nonzero pair product was skipped.
Terms product_below(const Terms &a, const Terms &b, const Rational &cut, bool &dropped)
{
    std::map<Rational, Rational> acc;
    for (const auto &x : a) {
        for (const auto &y : b) {
            Rational e = x.exponent + y.exponent;
            if (e >= cut) {
                dropped = true;
                break;
            }
            acc[e] += x.coefficient * y.coefficient;
        }
    }
    Terms out;
    out.reserve(acc.size());
    for (auto &[e, c] : acc) {
        if (!c.is_zero()) {
            out.push_back({e, c});
        }
    }
    return out;
}

// sum_k coeff(k) * u^k for a unit-relative series u (all exponents > 0),
// keeping relative exponents below `cut`.
Terms unit_series(const Terms &u, const Rational &cut, const std::function<Rational(long)> &coeff)
{
    std::map<Rational, Rational> acc;
    acc[Rational(0)] += coeff(0);
    Terms power{{Rational(0), Rational(1)}};
    for (long k = 1; !u.empty(); ++k) {
        bool dropped = false;
        power = product_below(power, u, cut, dropped);
        if (power.empty()) {
            break;
        }
        const Rational c = coeff(k);
        for (const auto &t : power) {
            acc[t.exponent] += c * t.coefficient;
        }
    }
    Terms out;
    for (auto &[e, c] : acc) {
        if (!c.is_zero()) {
            out.push_back({e, c});
        }
    }
    return out;
}

// Splits nonzero a as c * eps^v * (1 + u); returns u with its relative
// horizon (horizon of a minus v).
std::pair<Terms, std::optional<Rational>> unit_part(const LcNumber &a)
{
    const auto &terms = a.terms();
    const Rational &v = terms.front().exponent;
    const Rational c = terms.front().coefficient;
    Terms u;
    u.reserve(terms.size() - 1);
    for (std::size_t i = 1; i < terms.size(); ++i) {
        u.push_back({terms[i].exponent - v, terms[i].coefficient / c});
    }
    std::optional<Rational> hu;
    if (a.horizon()) {
        hu = *a.horizon() - v;
    }
    return {std::move(u), std::move(hu)};
}

Terms scaled_shifted(const Terms &terms, const Rational &scale, const Rational &shift)
{
    Terms out;
    out.reserve(terms.size());
    for (const auto &t : terms) {
        out.push_back({t.exponent + shift, t.coefficient * scale});
    }
    return out;
}

} // namespace

LcNumber::LcNumber(int precision) : m_precision(precision)
{
    check_precision(precision);
}

LcNumber::LcNumber(Terms terms, int precision, std::optional<Rational> horizon)
    : m_terms(std::move(terms)), m_precision(precision), m_horizon(std::move(horizon))
{
}

LcNumber LcNumber::from_terms(Terms terms, int precision, std::optional<Rational> horizon)
{
    check_precision(precision);
    terms = canonical_terms(std::move(terms));
    if (horizon) {
        std::erase_if(terms, [&](const Term &t) { return t.exponent >= *horizon; });
    }
    if (!terms.empty()) {
        const Rational cut = terms.front().exponent + Rational(precision);
        if (terms.back().exponent >= cut) {
            std::erase_if(terms, [&](const Term &t) { return t.exponent >= cut; });
            horizon = min_horizon(horizon, cut);
        }
    }
    return LcNumber(std::move(terms), precision, std::move(horizon));
}

std::optional<Rational> LcNumber::leading_exponent() const
{
    if (m_terms.empty()) {
        return std::nullopt;
    }
    return m_terms.front().exponent;
}

Rational LcNumber::leading_coefficient() const
{
    return m_terms.empty() ? Rational(0) : m_terms.front().coefficient;
}

Rational LcNumber::coefficient(const Rational &exponent) const
{
    const auto it = std::lower_bound(m_terms.begin(), m_terms.end(), exponent,
                                     [](const Term &t, const Rational &e) { return t.exponent < e; });
    if (it != m_terms.end() && it->exponent == exponent) {
        return it->coefficient;
    }
    return Rational(0);
}

LcNumber LcNumber::with_precision(int precision) const
{
    return from_terms(m_terms, precision, m_horizon);
}

std::string LcNumber::str() const
{
    std::string out;
    auto monomial = [](const Rational &coef, const Rational &exp) {
        if (exp.is_zero()) {
            return coef.str();
        }
        return coef.str() + "·eps^" + exp.str();
    };
    for (const auto &t : m_terms) {
        if (out.empty()) {
            out = monomial(t.coefficient, t.exponent);
        } else if (t.coefficient.sign() < 0) {
            out += " - " + monomial(-t.coefficient, t.exponent);
        } else {
            out += " + " + monomial(t.coefficient, t.exponent);
        }
    }
    if (out.empty()) {
        out = "0";
    }
    if (m_horizon) {
        out += " + O(eps^" + m_horizon->str() + ")";
    }
    return out;
}

LcNumber LcNumber::operator-() const
{
    Terms terms = m_terms;
    for (auto &t : terms) {
        t.coefficient = -t.coefficient;
    }
    return LcNumber(std::move(terms), m_precision, m_horizon);
}

LcNumber operator+(const LcNumber &a, const LcNumber &b)
{
    Terms merged;
    merged.reserve(a.m_terms.size() + b.m_terms.size());
    merged.insert(merged.end(), a.m_terms.begin(), a.m_terms.end());
    merged.insert(merged.end(), b.m_terms.begin(), b.m_terms.end());
    return LcNumber::from_terms(std::move(merged), std::min(a.m_precision, b.m_precision),
                                min_horizon(a.m_horizon, b.m_horizon));
}

LcNumber operator-(const LcNumber &a, const LcNumber &b)
{
    return a + (-b);
}

LcNumber operator*(const LcNumber &a, const LcNumber &b)
{
    const int precision = std::min(a.m_precision, b.m_precision);
    const bool a_exact_zero = a.is_zero() && a.is_exact();
    const bool b_exact_zero = b.is_zero() && b.is_exact();
    if (a_exact_zero || b_exact_zero) {
        return LcNumber(precision);
    }
    // (A + O(ha)) * (B + O(hb)): the error is O(eps^(ha + v(B))) + O(eps^(hb + v(A))),
    // where v of an unknown-but-small factor is its own horizon.
    auto order_of = [](const LcNumber &x) { return x.is_zero() ? *x.m_horizon : x.m_terms.front().exponent; };
    std::optional<Rational> horizon;
    if (a.m_horizon) {
        horizon = min_horizon(horizon, *a.m_horizon + order_of(b));
    }
    if (b.m_horizon) {
        horizon = min_horizon(horizon, *b.m_horizon + order_of(a));
    }
    if (a.is_zero() || b.is_zero()) {
        return LcNumber({}, precision, horizon);
    }
    const Rational window = a.m_terms.front().exponent + b.m_terms.front().exponent + Rational(precision);
    const Rational cut = horizon ? std::min(*horizon, window) : window;
    bool dropped = false;
    Terms product = product_below(a.m_terms, b.m_terms, cut, dropped);
    if (dropped && cut == window) {
        horizon = min_horizon(horizon, window);
    }
    return LcNumber::from_terms(std::move(product), precision, std::move(horizon));
}

LcNumber operator/(const LcNumber &a, const LcNumber &b)
{
    return a * inverse(b);
}

bool operator==(const LcNumber &a, const LcNumber &b)
{
    return a.m_terms == b.m_terms && a.m_horizon == b.m_horizon;
}

std::strong_ordering operator<=>(const LcNumber &a, const LcNumber &b)
{
    return compare(a, b);
}

LcNumber make_real(const Rational &q, int precision)
{
    return make_monomial(q, Rational(0), precision);
}

LcNumber make_monomial(const Rational &coefficient, const Rational &exponent, int precision)
{
    if (coefficient.is_zero()) {
        return LcNumber(precision);
    }
    return LcNumber::from_terms({{exponent, coefficient}}, precision);
}

LcNumber epsilon(int precision)
{
    return make_monomial(Rational(1), Rational(1), precision);
}

LcNumber infinite_unit(int precision)
{
    return make_monomial(Rational(1), Rational(-1), precision);
}

LcNumber add(const LcNumber &a, const LcNumber &b)
{
    return a + b;
}

LcNumber neg(const LcNumber &a)
{
    return -a;
}

LcNumber mul(const LcNumber &a, const LcNumber &b)
{
    return a * b;
}

LcNumber inverse(const LcNumber &a)
{
    if (a.is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    }
    const int precision = a.precision();
    const Rational v = *a.leading_exponent();
    const Rational c = a.leading_coefficient();
    const auto [u, hu] = unit_part(a);
    if (u.empty() && !hu) {
        return make_monomial(c.inverse(), -v, precision);
    }
    const Rational cut = hu ? std::min(*hu, Rational(precision)) : Rational(precision);
    // 1/(1+u) = sum (-u)^k
    Terms series = unit_series(u, cut, [](long k) { return Rational(k % 2 == 0 ? 1 : -1); });
    return LcNumber::from_terms(scaled_shifted(series, c.inverse(), -v), precision, cut - v);
}

LcNumber pow(const LcNumber &a, long exponent)
{
    if (exponent < 0) {
        return inverse(pow(a, -exponent));
    }
    LcNumber result = make_real(Rational(1), a.precision());
    LcNumber base = a;
    while (exponent > 0) {
        if (exponent & 1) {
            result = result * base;
        }
        exponent >>= 1;
        if (exponent > 0) {
            base = base * base;
        }
    }
    return result;
}

LcNumber sqrt(const LcNumber &a)
{
    const int precision = a.precision();
    if (a.is_zero()) {
        if (a.horizon()) {
            return LcNumber::from_terms({}, precision, *a.horizon() / Rational(2));
        }
        return LcNumber(precision);
    }
    const Rational c = a.leading_coefficient();
    if (c.sign() < 0) {
        throw Error(ErrorKind::NegativeLeadingCoefficient, "square root of a negative quantity (leading coefficient " + c.str() + ")");
    }
    const auto root = c.exact_sqrt();
    if (!root) {
        throw Error(ErrorKind::IrrationalRoot, "leading coefficient " + c.str() + " is not the square of a rational");
    }
    const Rational half_v = *a.leading_exponent() / Rational(2);
    const auto [u, hu] = unit_part(a);
    if (u.empty() && !hu) {
        return make_monomial(*root, half_v, precision);
    }
    const Rational cut = hu ? std::min(*hu, Rational(precision)) : Rational(precision);
    // sqrt(1+u) = sum binom(1/2, k) u^k; the binomial coefficients follow
    // binom(1/2, k) = binom(1/2, k-1) * (1/2 - (k-1)) / k.
    std::vector<Rational> binom{Rational(1)};
    auto coeff = [&binom](long k) {
        while (static_cast<long>(binom.size()) <= k) {
            const long j = static_cast<long>(binom.size());
            binom.push_back(binom.back() * (Rational(1, 2) - Rational(j - 1)) / Rational(j));
        }
        return binom[static_cast<std::size_t>(k)];
    };
    Terms series = unit_series(u, cut, coeff);
    LcNumber result = LcNumber::from_terms(scaled_shifted(series, *root, half_v), precision, cut + half_v);
    if (a.is_exact()) {
        // Perfect squares such as 1 + 2eps + eps^2 have a terminating root.
        const LcNumber candidate = LcNumber::from_terms(result.terms(), precision);
        if (candidate * candidate == a) {
            return candidate;
        }
    }
    return result;
}

std::strong_ordering compare(const LcNumber &a, const LcNumber &b)
{
    const LcNumber d = a - b;
    const int s = d.leading_coefficient().sign();
    return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

Classification classify(const LcNumber &a)
{
    if (a.is_zero()) {
        return Classification::zero;
    }
    const int s = a.leading_exponent()->sign();
    return s > 0 ? Classification::infinitesimal : s == 0 ? Classification::appreciable : Classification::infinite;
}

bool is_finite(const LcNumber &a)
{
    return classify(a) != Classification::infinite;
}

Rational standard_part(const LcNumber &a)
{
    if (classify(a) == Classification::infinite) {
        throw Error(ErrorKind::InfiniteOperand, "standard part of infinite quantity " + a.str());
    }
    if (a.horizon() && a.horizon()->sign() <= 0) {
        throw Error(ErrorKind::PrecisionExhausted, "the eps^0 coefficient of " + a.str() + " is not known");
    }
    return a.coefficient(Rational(0));
}

bool is_infinitely_close(const LcNumber &a, const LcNumber &b)
{
    const auto c = classify(a - b);
    return c == Classification::zero || c == Classification::infinitesimal;
}

LcNumber tlh_reduce(const LcNumber &a)
{
    if (a.is_zero()) {
        return a;
    }
    return LcNumber::from_terms({a.terms().front()}, a.precision());
}

bool agrees(const LcNumber &a, const LcNumber &b)
{
    return (a - b).is_zero();
}

} // namespace leibniz
