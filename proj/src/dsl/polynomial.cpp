#include <leibniz/dsl/polynomial.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace leibniz::dsl
{

namespace
{

unsigned total_degree(const Monomial &m)
{
    return std::accumulate(m.begin(), m.end(), 0U);
}

bool divides(const Monomial &d, const Monomial &m)
{
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] > m[i]) {
            return false;
        }
    }
    return true;
}

Monomial monomial_quotient(const Monomial &m, const Monomial &d)
{
    Monomial out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        out[i] = m[i] - d[i];
    }
    return out;
}

Monomial monomial_product(const Monomial &a, const Monomial &b)
{
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + b[i];
    }
    return out;
}

void require_same_ring(const Polynomial &a, const Polynomial &b)
{
    if (a.nvars() != b.nvars()) {
        throw std::invalid_argument("polynomials over different variable sets");
    }
}

} // namespace

bool GradedLexGreater::operator()(const Monomial &a, const Monomial &b) const
{
    const unsigned da = total_degree(a);
    const unsigned db = total_degree(b);
    if (da != db) {
        return da > db;
    }
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational &c)
{
    Polynomial p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index)
{
    if (index >= nvars) {
        throw std::out_of_range("variable index out of range");
    }
    Monomial m(nvars, 0);
    m[index] = 1;
    Polynomial p(nvars);
    p.add_term(m, Rational(1));
    return p;
}

bool Polynomial::is_constant() const
{
    return m_terms.empty() || (m_terms.size() == 1 && total_degree(m_terms.begin()->first) == 0);
}

unsigned Polynomial::degree_in(std::size_t var) const
{
    unsigned d = 0;
    for (const auto &[m, c] : m_terms) {
        d = std::max(d, m[var]);
    }
    return d;
}

Polynomial Polynomial::coefficient_in(std::size_t var, unsigned k) const
{
    Polynomial out(m_nvars);
    for (const auto &[m, c] : m_terms) {
        if (m[var] == k) {
            Monomial reduced = m;
            reduced[var] = 0;
            out.m_terms.emplace(std::move(reduced), c);
        }
    }
    return out;
}

Polynomial Polynomial::monic() const
{
    if (is_zero()) {
        return *this;
    }
    return *this * leading_coefficient().inverse();
}

Rational Polynomial::evaluate(const std::vector<Rational> &point) const
{
    if (point.size() != m_nvars) {
        throw std::invalid_argument("evaluation point has the wrong dimension");
    }
    Rational total(0);
    for (const auto &[m, c] : m_terms) {
        Rational term = c;
        for (std::size_t i = 0; i < m_nvars; ++i) {
            if (m[i] != 0) {
                term *= point[i].pow(m[i]);
            }
        }
        total += term;
    }
    return total;
}

std::string Polynomial::str(const std::vector<std::string> &names) const
{
    if (m_terms.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &[m, c] : m_terms) {
        std::string mono;
        for (std::size_t i = 0; i < m_nvars; ++i) {
            if (m[i] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += "*";
            }
            mono += names.at(i);
            if (m[i] > 1) {
                mono += "^" + std::to_string(m[i]);
            }
        }
        const Rational mag = c.abs();
        std::string piece;
        if (mono.empty()) {
            piece = mag.str();
        } else if (mag == Rational(1)) {
            piece = mono;
        } else {
            piece = mag.str() + "*" + mono;
        }
        if (out.empty()) {
            out = c.sign() < 0 ? "-" + piece : piece;
        } else {
            out += c.sign() < 0 ? " - " + piece : " + " + piece;
        }
    }
    return out;
}

void Polynomial::add_term(const Monomial &m, const Rational &c)
{
    if (m.size() != m_nvars) {
        throw std::invalid_argument("monomial has the wrong number of variables");
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = m_terms.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            m_terms.erase(it);
        }
    }
}

Polynomial Polynomial::operator-() const
{
    Polynomial out = *this;
    for (auto &[m, c] : out.m_terms) {
        c = -c;
    }
    return out;
}

Polynomial &Polynomial::operator+=(const Polynomial &o)
{
    require_same_ring(*this, o);
    for (const auto &[m, c] : o.m_terms) {
        add_term(m, c);
    }
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o)
{
    require_same_ring(*this, o);
    for (const auto &[m, c] : o.m_terms) {
        add_term(m, -c);
    }
    return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b)
{
    require_same_ring(a, b);
    Polynomial out(a.m_nvars);
    for (const auto &[ma, ca] : a.m_terms) {
        for (const auto &[mb, cb] : b.m_terms) {
            out.add_term(monomial_product(ma, mb), ca * cb);
        }
    }
    return out;
}

Polynomial operator*(Polynomial a, const Rational &c)
{
    if (c.is_zero()) {
        return Polynomial(a.m_nvars);
    }
    for (auto &[m, coef] : a.m_terms) {
        coef *= c;
    }
    return a;
}

Polynomial Polynomial::pow(unsigned exponent) const
{
    Polynomial result = constant(m_nvars, Rational(1));
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1U) {
            result = result * base;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base = base * base;
        }
    }
    return result;
}

DivisionResult divide(const Polynomial &dividend, const Polynomial &divisor)
{
    require_same_ring(dividend, divisor);
    if (divisor.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    const auto &[lead_m, lead_c] = divisor.leading_term();
    DivisionResult out{Polynomial(dividend.nvars()), Polynomial(dividend.nvars())};
    Polynomial p = dividend;
    while (!p.is_zero()) {
        const auto [m, c] = p.leading_term();
        if (divides(lead_m, m)) {
            Polynomial t(dividend.nvars());
            t.add_term(monomial_quotient(m, lead_m), c / lead_c);
            out.quotient += t;
            p -= t * divisor;
        } else {
            out.remainder.add_term(m, c);
            Polynomial t(dividend.nvars());
            t.add_term(m, c);
            p -= t;
        }
    }
    return out;
}

Polynomial exact_quotient(const Polynomial &dividend, const Polynomial &divisor)
{
    auto [q, r] = divide(dividend, divisor);
    if (!r.is_zero()) {
        throw std::domain_error("polynomial division is not exact");
    }
    return q;
}

namespace
{

Polynomial content_in(const Polynomial &p, std::size_t var)
{
    Polynomial g(p.nvars());
    for (unsigned k = 0, d = p.degree_in(var); k <= d; ++k) {
        const Polynomial c = p.coefficient_in(var, k);
        if (!c.is_zero()) {
            g = gcd(g, c);
        }
    }
    return g;
}

Polynomial primitive_part_in(const Polynomial &p, std::size_t var)
{
    if (p.is_zero()) {
        return p;
    }
    return exact_quotient(p, content_in(p, var));
}

// Pseudo-remainder of a by b with respect to var.
Polynomial pseudo_remainder(const Polynomial &a, const Polynomial &b, std::size_t var)
{
    const unsigned db = b.degree_in(var);
    const Polynomial lead_b = b.coefficient_in(var, db);
    Polynomial r = a;
    while (!r.is_zero() && r.degree_in(var) >= db) {
        const unsigned dr = r.degree_in(var);
        const Polynomial lead_r = r.coefficient_in(var, dr);
        Monomial shift(a.nvars(), 0);
        shift[var] = dr - db;
        Polynomial xs(a.nvars());
        xs.add_term(shift, Rational(1));
        if (lead_b.is_constant()) {
            r -= lead_r * xs * b * lead_b.leading_coefficient().inverse();
        } else {
            r = lead_b * r - lead_r * xs * b;
        }
    }
    return r;
}

} // namespace

Polynomial gcd(const Polynomial &a, const Polynomial &b)
{
    require_same_ring(a, b);
    const std::size_t n = a.nvars();
    if (a.is_zero()) {
        return b.monic();
    }
    if (b.is_zero()) {
        return a.monic();
    }
    if (a.is_constant() || b.is_constant()) {
        return Polynomial::constant(n, Rational(1));
    }
    // Highest-index variable present in either operand; the coefficients
    // with respect to it only involve lower-index variables.
    std::size_t var = n;
    for (std::size_t i = n; i-- > 0;) {
        if (a.involves(i) || b.involves(i)) {
            var = i;
            break;
        }
    }
    if (!a.involves(var)) {
        return gcd(a, content_in(b, var));
    }
    if (!b.involves(var)) {
        return gcd(content_in(a, var), b);
    }
    const Polynomial ca = content_in(a, var);
    const Polynomial cb = content_in(b, var);
    const Polynomial c = gcd(ca, cb);
    Polynomial p = exact_quotient(a, ca);
    Polynomial q = exact_quotient(b, cb);
    if (p.degree_in(var) < q.degree_in(var)) {
        std::swap(p, q);
    }
    while (true) {
        const Polynomial r = pseudo_remainder(p, q, var);
        if (r.is_zero()) {
            break;
        }
        if (!r.involves(var)) {
            q = Polynomial::constant(n, Rational(1));
            break;
        }
        p = q;
        q = primitive_part_in(r, var).monic();
    }
    const Polynomial g = q.involves(var) ? primitive_part_in(q, var) : Polynomial::constant(n, Rational(1));
    return (c * g).monic();
}

} // namespace leibniz::dsl
