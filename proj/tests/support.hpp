#ifndef LEIBNIZ_TESTS_SUPPORT_HPP
#define LEIBNIZ_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <leibniz/dsl/expr.hpp>
#include <leibniz/lc_number.hpp>
#include <leibniz/rational.hpp>

namespace leibniz::testing
{

// Deterministic generators for property tests.
class Gen
{
public:
    explicit Gen(std::uint64_t seed) : m_rng(seed) {}

    long integer(long lo, long hi)
    {
        return std::uniform_int_distribution<long>(lo, hi)(m_rng);
    }

    bool coin()
    {
        return integer(0, 1) == 1;
    }

    // p/q with |p| <= num_bound and 1 <= q <= den_bound.
    Rational rational(long num_bound = 20, long den_bound = 9)
    {
        return Rational(integer(-num_bound, num_bound), integer(1, den_bound));
    }

    Rational nonzero_rational(long num_bound = 20, long den_bound = 9)
    {
        Rational q = rational(num_bound, den_bound);
        while (q.is_zero()) {
            q = rational(num_bound, den_bound);
        }
        return q;
    }

    // A few terms with exponents in [lo, hi], halves allowed.
    LcNumber series(long lo, long hi, int precision = default_precision)
    {
        std::vector<LcNumber::Term> terms;
        const long n = integer(0, 4);
        for (long i = 0; i < n; ++i) {
            terms.push_back({Rational(integer(2 * lo, 2 * hi), 2), rational()});
        }
        return LcNumber::from_terms(std::move(terms), precision);
    }

    LcNumber finite(int precision = default_precision)
    {
        return series(0, 3, precision);
    }

    LcNumber any(int precision = default_precision)
    {
        return series(-2, 3, precision);
    }

    LcNumber nonzero(int precision = default_precision)
    {
        LcNumber x = any(precision);
        while (x.is_zero()) {
            x = any(precision);
        }
        return x;
    }

    // Polynomial in `var` of degree <= max_degree with small coefficients.
    dsl::Expr polynomial(const std::string &var, int max_degree = 3)
    {
        const long degree = integer(0, max_degree);
        dsl::Expr p = dsl::Expr::constant(rational(9, 4));
        for (long k = 1; k <= degree; ++k) {
            const Rational c = rational(9, 4);
            if (c.is_zero()) {
                continue;
            }
            dsl::Expr mono = k == 1 ? dsl::Expr::variable(var) : dsl::Expr::power(dsl::Expr::variable(var), k);
            p = p + dsl::Expr::constant(c) * mono;
        }
        return p;
    }

    // Random tree over the rational fragment in `vars`, or with sqrt and st
    // nodes when `full`.
    dsl::Expr tree(const std::vector<std::string> &vars, int depth, bool full = false, bool units = true)
    {
        using dsl::Expr;
        if (depth <= 0 || integer(0, 3) == 0) {
            switch (units ? integer(0, 3) : integer(0, 1) * 3) {
            case 0:
                return Expr::constant(rational(9, 5));
            case 1:
                return Expr::eps();
            case 2:
                return Expr::infinite_unit();
            default:
                return Expr::variable(vars[static_cast<std::size_t>(integer(0, static_cast<long>(vars.size()) - 1))]);
            }
        }
        const long kinds = full ? 9 : 7;
        switch (integer(0, kinds - 1)) {
        case 0:
            return tree(vars, depth - 1, full, units) + tree(vars, depth - 1, full, units);
        case 1:
            return tree(vars, depth - 1, full, units) - tree(vars, depth - 1, full, units);
        case 2:
            return tree(vars, depth - 1, full, units) * tree(vars, depth - 1, full, units);
        case 3:
            return tree(vars, depth - 1, full, units) / tree(vars, depth - 1, full, units);
        case 4:
            return Expr::power(tree(vars, depth - 1, full, units), integer(-2, 3));
        case 5:
        case 6:
            return -tree(vars, depth - 1, full, units);
        case 7:
            return Expr::sqrt(tree(vars, depth - 1, full, units));
        default:
            return Expr::st(tree(vars, depth - 1, full, units));
        }
    }

    std::mt19937_64 &engine()
    {
        return m_rng;
    }

private:
    std::mt19937_64 m_rng;
};

} // namespace leibniz::testing

#endif
