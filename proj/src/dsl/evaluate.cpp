#include <leibniz/dsl/evaluate.hpp>

namespace leibniz::dsl
{

namespace
{

template <typename F>
LcNumber at_node(const Expr &e, F &&f)
{
    try {
        return f();
    } catch (const Error &err) {
        if (err.position()) {
            throw;
        }
        throw err.with_position(e.position());
    }
}

} // namespace

LcNumber evaluate(const Expr &e, const Bindings &env, int precision)
{
    auto eval = [&](const Expr &x) { return evaluate(x, env, precision); };
    return std::visit(
        overloaded{
            [&](const Const &x) { return make_real(x.value, precision); },
            [&](const Var &x) {
                const auto it = env.find(x.name);
                if (it == env.end()) {
                    throw Error(ErrorKind::UnboundVariable, "no binding for '" + x.name + "'", e.position());
                }
                return it->second;
            },
            [&](const Eps &) { return epsilon(precision); },
            [&](const HUnit &) { return infinite_unit(precision); },
            [&](const Add &x) { return eval(x.lhs) + eval(x.rhs); },
            [&](const Sub &x) { return eval(x.lhs) - eval(x.rhs); },
            [&](const Mul &x) { return eval(x.lhs) * eval(x.rhs); },
            [&](const Div &x) {
                const LcNumber num = eval(x.lhs);
                const LcNumber den = eval(x.rhs);
                return at_node(e, [&] { return num / den; });
            },
            [&](const Pow &x) {
                const LcNumber base = eval(x.base);
                return at_node(e, [&] { return pow(base, x.exponent); });
            },
            [&](const Sqrt &x) {
                const LcNumber arg = eval(x.arg);
                return at_node(e, [&] { return sqrt(arg); });
            },
            [&](const St &x) {
                const LcNumber arg = eval(x.arg);
                return at_node(e, [&] { return make_real(standard_part(arg), precision); });
            },
            [&](const Neg &x) { return -eval(x.arg); },
        },
        e.node().kind);
}

} // namespace leibniz::dsl
