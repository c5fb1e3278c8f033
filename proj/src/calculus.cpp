#include <leibniz/calculus.hpp>

#include <leibniz/error.hpp>

namespace leibniz::calculus
{

using dsl::Expr;

DiffResult::DiffResult(LcNumber quotient) : m_quotient(std::move(quotient))
{
    if (classify(m_quotient) == Classification::infinite) {
        throw Error(ErrorKind::NotFinite, "differential quotient " + m_quotient.str() + " is infinite");
    }
    m_shadow = standard_part(m_quotient);
    m_discarded = m_quotient - make_real(m_shadow, m_quotient.precision());
    const auto c = classify(m_discarded);
    if (c != Classification::zero && c != Classification::infinitesimal) {
        throw std::logic_error("discarded part of a differential quotient must be infinitesimal");
    }
}

namespace
{

LcNumber increment(Direction direction, int precision)
{
    return direction == Direction::forward ? epsilon(precision) : -epsilon(precision);
}

LcNumber evaluate_at(const Expr &f, const std::string &var, const LcNumber &x, dsl::Bindings env, int precision)
{
    env.insert_or_assign(var, x);
    return dsl::evaluate(f, env, precision);
}

} // namespace

LcNumber differential_quotient(const Expr &f, const std::string &var, const LcNumber &point, const dsl::Bindings &env,
                               Direction direction, int precision)
{
    const LcNumber dx = increment(direction, precision);
    const LcNumber dy = evaluate_at(f, var, point + dx, env, precision) - evaluate_at(f, var, point, env, precision);
    return dy * inverse(dx);
}

DiffResult derivative_at(const Expr &f, const std::string &var, const Rational &point, const dsl::Bindings &env,
                         Direction direction, int precision)
{
    return DiffResult(differential_quotient(f, var, make_real(point, precision), env, direction, precision));
}

namespace
{

bool is_const(const Expr &e, const Rational &value)
{
    const auto *c = e.as<dsl::Const>();
    return c != nullptr && c->value == value;
}

Expr add(const Expr &a, const Expr &b)
{
    if (is_const(a, 0)) {
        return b;
    }
    if (is_const(b, 0)) {
        return a;
    }
    if (a.as<dsl::Const>() && b.as<dsl::Const>()) {
        return Expr::constant(a.as<dsl::Const>()->value + b.as<dsl::Const>()->value);
    }
    return a + b;
}

Expr negate(const Expr &a)
{
    if (const auto *c = a.as<dsl::Const>()) {
        return Expr::constant(-c->value);
    }
    return -a;
}

Expr sub(const Expr &a, const Expr &b)
{
    if (is_const(b, 0)) {
        return a;
    }
    if (is_const(a, 0)) {
        return negate(b);
    }
    if (a.as<dsl::Const>() && b.as<dsl::Const>()) {
        return Expr::constant(a.as<dsl::Const>()->value - b.as<dsl::Const>()->value);
    }
    return a - b;
}

Expr mul(const Expr &a, const Expr &b)
{
    if (is_const(a, 0) || is_const(b, 0)) {
        return Expr::constant(0);
    }
    if (is_const(a, 1)) {
        return b;
    }
    if (is_const(b, 1)) {
        return a;
    }
    if (a.as<dsl::Const>() && b.as<dsl::Const>()) {
        return Expr::constant(a.as<dsl::Const>()->value * b.as<dsl::Const>()->value);
    }
    return a * b;
}

Expr div(const Expr &a, const Expr &b)
{
    if (is_const(a, 0)) {
        return Expr::constant(0);
    }
    if (is_const(b, 1)) {
        return a;
    }
    return a / b;
}

Expr power(const Expr &base, long n)
{
    if (n == 0) {
        return Expr::constant(1);
    }
    if (n == 1) {
        return base;
    }
    return Expr::power(base, n);
}

} // namespace

Expr symbolic_derivative(const Expr &f, const std::string &var)
{
    auto d = [&](const Expr &e) { return symbolic_derivative(e, var); };
    return std::visit(
        dsl::overloaded{
            [&](const dsl::Var &x) { return Expr::constant(x.name == var ? 1 : 0); },
            [&](const dsl::Add &x) { return add(d(x.lhs), d(x.rhs)); },
            [&](const dsl::Sub &x) { return sub(d(x.lhs), d(x.rhs)); },
            [&](const dsl::Mul &x) { return add(mul(d(x.lhs), x.rhs), mul(x.lhs, d(x.rhs))); },
            [&](const dsl::Div &x) {
                return div(sub(mul(d(x.lhs), x.rhs), mul(x.lhs, d(x.rhs))), power(x.rhs, 2));
            },
            [&](const dsl::Pow &x) {
                return mul(mul(Expr::constant(x.exponent), power(x.base, x.exponent - 1)), d(x.base));
            },
            [&](const dsl::Neg &x) { return negate(d(x.arg)); },
            [&](const dsl::Sqrt &) -> Expr {
                throw Error(ErrorKind::UnsupportedNode, "symbolic derivative of sqrt", f.position());
            },
            [&](const dsl::St &) -> Expr {
                throw Error(ErrorKind::UnsupportedNode, "symbolic derivative of st", f.position());
            },
            // Const, Eps, HUnit
            [](const auto &) { return Expr::constant(0); },
        },
        f.node().kind);
}

GalleryReport product_rule_report(const Expr &u, const Expr &v, const std::string &var, const Rational &point,
                                  const dsl::Bindings &env, int precision)
{
    GalleryReport report(ExampleId::product_rule);
    report.parameters = {"u = " + dsl::to_string(u), "v = " + dsl::to_string(v), var + " = " + point.str()};

    const LcNumber x = make_real(point, precision);
    const LcNumber dx = epsilon(precision);
    const LcNumber u0 = evaluate_at(u, var, x, env, precision);
    const LcNumber v0 = evaluate_at(v, var, x, env, precision);
    const LcNumber du = evaluate_at(u, var, x + dx, env, precision) - u0;
    const LcNumber dv = evaluate_at(v, var, x + dx, env, precision) - v0;
    const Expr uv = u * v;
    const LcNumber duv = evaluate_at(uv, var, x + dx, env, precision) - evaluate_at(uv, var, x, env, precision);

    // Both factors must have finite differential quotients.
    const DiffResult du_dx(du * inverse(dx));
    const DiffResult dv_dx(dv * inverse(dx));
    const DiffResult duv_dx(duv * inverse(dx));

    const LcNumber expanded = u0 * dv + v0 * du + du * dv;
    report.check("d(uv) = (u+du)(v+dv) - uv = u dv + v du + du dv", duv.str(), expanded.str(), agrees(duv, expanded));

    const Rational leibniz = standard_part(u0) * dv_dx.shadow() + standard_part(v0) * du_dx.shadow();
    report.check("st(d(uv)/dx) = st(u) st(dv/dx) + st(v) st(du/dx)", duv_dx.shadow().str(), leibniz.str());

    const LcNumber superfluous = du * dv * inverse(dx);
    const auto c = classify(superfluous);
    report.check("du dv / dx is infinitesimal or zero", std::string(classification_name(c)) + ": " + superfluous.str(),
                 "zero or infinitesimal", c == Classification::zero || c == Classification::infinitesimal);

    if (dsl::is_rational_expression(uv)) {
        dsl::Bindings at = env;
        at.insert_or_assign(var, x);
        const LcNumber oracle = dsl::evaluate(symbolic_derivative(uv, var), at, precision);
        report.check("shadow of d(uv)/dx equals the symbolic derivative of uv", duv_dx.shadow().str(),
                     is_finite(oracle) ? standard_part(oracle).str() : oracle.str());
    }
    return report;
}

GalleryReport scaled_product_report(const Rational &a, const Expr &v, const std::string &var, const Rational &point,
                                    const dsl::Bindings &env, int precision)
{
    if (a.is_zero()) {
        throw std::invalid_argument("the constant a in a y = x v must be nonzero");
    }
    GalleryReport report(ExampleId::product_rule);
    report.parameters = {"a = " + a.str(), "v = " + dsl::to_string(v), var + " = " + point.str()};

    const Expr y = Expr::variable(var) * v / Expr::constant(a);
    const LcNumber x = make_real(point, precision);
    const LcNumber dx = epsilon(precision);
    const LcNumber v0 = evaluate_at(v, var, x, env, precision);
    const LcNumber dv = evaluate_at(v, var, x + dx, env, precision) - v0;
    const LcNumber dy = evaluate_at(y, var, x + dx, env, precision) - evaluate_at(y, var, x, env, precision);
    const LcNumber a_lc = make_real(a, precision);

    const LcNumber lhs = a_lc * dy * inverse(dx);
    const LcNumber rhs = x * dv * inverse(dx) + v0 + dv;
    report.check("a dy/dx = x dv/dx + v + dv", lhs.str(), rhs.str(), agrees(lhs, rhs));

    const auto dv_class = classify(dv);
    report.check("dv can become evanescent (zero or infinitesimal)", classification_name(dv_class),
                 "zero or infinitesimal",
                 dv_class == Classification::zero || dv_class == Classification::infinitesimal);

    const DiffResult dy_dx(dy * inverse(dx));
    const DiffResult dv_dx(dv * inverse(dx));
    const Rational assignable_lhs = a * dy_dx.shadow();
    const Rational assignable_rhs = point * dv_dx.shadow() + standard_part(v0);
    report.check("a (d)y/(d)x = x (d)v/(d)x + v", assignable_lhs.str(), assignable_rhs.str());

    if (classify(rhs) == Classification::appreciable) {
        report.check("homogeneity reduces x dv/dx + v + dv to a (d)y/(d)x", tlh_reduce(rhs).str(),
                     make_real(assignable_lhs, precision).str());
    } else {
        report.check("st(x dv/dx + v + dv) = a (d)y/(d)x", standard_part(rhs).str(), assignable_lhs.str());
    }
    return report;
}

} // namespace leibniz::calculus
