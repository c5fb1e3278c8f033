#ifndef LEIBNIZ_CALCULUS_HPP
#define LEIBNIZ_CALCULUS_HPP

#include <string>

#include <leibniz/dsl/evaluate.hpp>
#include <leibniz/dsl/expr.hpp>
#include <leibniz/lc_number.hpp>
#include <leibniz/report.hpp>

namespace leibniz::calculus
{

// Sign of the infinitesimal increment dx.
enum class Direction { forward, backward };

// The inassignable differential quotient dy/dx, its assignable shadow
// (d)y/(d)x, and the infinitesimal remainder dropped between the two.
// quotient = shadow + discarded, with discarded zero or infinitesimal.
class DiffResult
{
public:
    // Throws NotFinite for an infinite quotient.
    explicit DiffResult(LcNumber quotient);

    const LcNumber &quotient() const
    {
        return m_quotient;
    }
    const Rational &shadow() const
    {
        return m_shadow;
    }
    const LcNumber &discarded() const
    {
        return m_discarded;
    }

private:
    LcNumber m_quotient;
    Rational m_shadow;
    LcNumber m_discarded;
};

// (f(point + dx) - f(point)) / dx with dx = +eps or -eps.
LcNumber differential_quotient(const dsl::Expr &f, const std::string &var, const LcNumber &point,
                               const dsl::Bindings &env = {}, Direction direction = Direction::forward,
                               int precision = default_precision);

DiffResult derivative_at(const dsl::Expr &f, const std::string &var, const Rational &point,
                         const dsl::Bindings &env = {}, Direction direction = Direction::forward,
                         int precision = default_precision);

// Textbook rules with constant folding; the independent cross-check for
// derivative_at. Throws UnsupportedNode on Sqrt or St.
dsl::Expr symbolic_derivative(const dsl::Expr &f, const std::string &var);

// d(uv) = u dv + v du + du dv at the point, the shadow of d(uv)/dx against
// st(u) st(dv/dx) + st(v) st(du/dx), and du dv / dx infinitesimal.
GalleryReport product_rule_report(const dsl::Expr &u, const dsl::Expr &v, const std::string &var,
                                  const Rational &point, const dsl::Bindings &env = {},
                                  int precision = default_precision);

// The case a y = x v: a dy/dx = x dv/dx + v + dv holds exactly, dv is
// infinitesimal, and dropping it leaves a (d)y/(d)x = x (d)v/(d)x + v.
GalleryReport scaled_product_report(const Rational &a, const dsl::Expr &v, const std::string &var,
                                    const Rational &point, const dsl::Bindings &env = {},
                                    int precision = default_precision);

} // namespace leibniz::calculus

#endif
