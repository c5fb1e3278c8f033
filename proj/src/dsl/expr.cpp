#include <leibniz/dsl/expr.hpp>

#include <stdexcept>
#include <utility>

namespace leibniz::dsl
{

struct ExprFactory {
    static Expr build(Node::Kind kind, std::size_t position)
    {
        return Expr(std::make_shared<const Node>(Node{std::move(kind), position}));
    }
};

namespace
{

Expr make(Node::Kind kind, std::size_t position)
{
    return ExprFactory::build(std::move(kind), position);
}

} // namespace

Expr Expr::constant(const Rational &value, std::size_t position)
{
    return make(Const{value}, position);
}

Expr Expr::variable(std::string name, std::size_t position)
{
    if (name.empty() || is_reserved_word(name)) {
        throw std::invalid_argument("invalid variable name '" + name + "'");
    }
    return make(Var{std::move(name)}, position);
}

Expr Expr::eps(std::size_t position)
{
    return make(Eps{}, position);
}

Expr Expr::infinite_unit(std::size_t position)
{
    return make(HUnit{}, position);
}

Expr Expr::sum(Expr lhs, Expr rhs, std::size_t position)
{
    return make(Add{std::move(lhs), std::move(rhs)}, position);
}

Expr Expr::difference(Expr lhs, Expr rhs, std::size_t position)
{
    return make(Sub{std::move(lhs), std::move(rhs)}, position);
}

Expr Expr::product(Expr lhs, Expr rhs, std::size_t position)
{
    return make(Mul{std::move(lhs), std::move(rhs)}, position);
}

Expr Expr::quotient(Expr lhs, Expr rhs, std::size_t position)
{
    return make(Div{std::move(lhs), std::move(rhs)}, position);
}

Expr Expr::power(Expr base, long exponent, std::size_t position)
{
    return make(Pow{std::move(base), exponent}, position);
}

Expr Expr::sqrt(Expr arg, std::size_t position)
{
    return make(Sqrt{std::move(arg)}, position);
}

Expr Expr::st(Expr arg, std::size_t position)
{
    return make(St{std::move(arg)}, position);
}

Expr Expr::negate(Expr arg, std::size_t position)
{
    return make(Neg{std::move(arg)}, position);
}

std::size_t Expr::position() const
{
    return m_node->position;
}

bool operator==(const Expr &a, const Expr &b)
{
    if (a.m_node == b.m_node) {
        return true;
    }
    const auto &ka = a.node().kind;
    const auto &kb = b.node().kind;
    if (ka.index() != kb.index()) {
        return false;
    }
    return std::visit(
        overloaded{
            [&](const Const &x) { return x.value == std::get<Const>(kb).value; },
            [&](const Var &x) { return x.name == std::get<Var>(kb).name; },
            [](const Eps &) { return true; },
            [](const HUnit &) { return true; },
            [&](const Add &x) { return x.lhs == std::get<Add>(kb).lhs && x.rhs == std::get<Add>(kb).rhs; },
            [&](const Sub &x) { return x.lhs == std::get<Sub>(kb).lhs && x.rhs == std::get<Sub>(kb).rhs; },
            [&](const Mul &x) { return x.lhs == std::get<Mul>(kb).lhs && x.rhs == std::get<Mul>(kb).rhs; },
            [&](const Div &x) { return x.lhs == std::get<Div>(kb).lhs && x.rhs == std::get<Div>(kb).rhs; },
            [&](const Pow &x) { return x.exponent == std::get<Pow>(kb).exponent && x.base == std::get<Pow>(kb).base; },
            [&](const Sqrt &x) { return x.arg == std::get<Sqrt>(kb).arg; },
            [&](const St &x) { return x.arg == std::get<St>(kb).arg; },
            [&](const Neg &x) { return x.arg == std::get<Neg>(kb).arg; },
        },
        ka);
}

bool is_reserved_word(const std::string &name)
{
    return name == "eps" || name == "H" || name == "sqrt" || name == "st";
}

std::string to_string(const Expr &e)
{
    auto binary = [](const Expr &l, const char *op, const Expr &r) {
        return "(" + to_string(l) + " " + op + " " + to_string(r) + ")";
    };
    return std::visit(
        overloaded{
            [](const Const &x) {
                return x.value.sign() < 0 ? "(-" + (-x.value).str() + ")" : x.value.str();
            },
            [](const Var &x) { return x.name; },
            [](const Eps &) { return std::string("eps"); },
            [](const HUnit &) { return std::string("H"); },
            [&](const Add &x) { return binary(x.lhs, "+", x.rhs); },
            [&](const Sub &x) { return binary(x.lhs, "-", x.rhs); },
            [&](const Mul &x) { return binary(x.lhs, "*", x.rhs); },
            [&](const Div &x) {
                // "p / q" with literal operands would be read back as one
                // rational constant.
                const std::string rhs = x.rhs.as<Const>() ? "(" + to_string(x.rhs) + ")" : to_string(x.rhs);
                return "(" + to_string(x.lhs) + " / " + rhs + ")";
            },
            [](const Pow &x) {
                std::string base = to_string(x.base);
                if (x.base.as<Const>() || x.base.as<Pow>()) {
                    base = "(" + base + ")";
                }
                return base + "^" + std::to_string(x.exponent);
            },
            [](const Sqrt &x) { return "sqrt(" + to_string(x.arg) + ")"; },
            [](const St &x) { return "st(" + to_string(x.arg) + ")"; },
            [](const Neg &x) {
                // "(-5)" would be read back as the literal -5
                const Const *c = x.arg.as<Const>();
                return c != nullptr && c->value.sign() >= 0 ? "(-(" + to_string(x.arg) + "))"
                                                             : "(-" + to_string(x.arg) + ")";
            },
        },
        e.node().kind);
}

namespace
{

void collect_variables(const Expr &e, std::set<std::string> &out)
{
    std::visit(overloaded{
                   [&](const Var &x) { out.insert(x.name); },
                   [&](const Add &x) { collect_variables(x.lhs, out), collect_variables(x.rhs, out); },
                   [&](const Sub &x) { collect_variables(x.lhs, out), collect_variables(x.rhs, out); },
                   [&](const Mul &x) { collect_variables(x.lhs, out), collect_variables(x.rhs, out); },
                   [&](const Div &x) { collect_variables(x.lhs, out), collect_variables(x.rhs, out); },
                   [&](const Pow &x) { collect_variables(x.base, out); },
                   [&](const Sqrt &x) { collect_variables(x.arg, out); },
                   [&](const St &x) { collect_variables(x.arg, out); },
                   [&](const Neg &x) { collect_variables(x.arg, out); },
                   [](const auto &) {},
               },
               e.node().kind);
}

} // namespace

std::set<std::string> free_variables(const Expr &e)
{
    std::set<std::string> out;
    collect_variables(e, out);
    return out;
}

bool is_rational_expression(const Expr &e)
{
    return std::visit(overloaded{
                          [](const Sqrt &) { return false; },
                          [](const St &) { return false; },
                          [](const Add &x) { return is_rational_expression(x.lhs) && is_rational_expression(x.rhs); },
                          [](const Sub &x) { return is_rational_expression(x.lhs) && is_rational_expression(x.rhs); },
                          [](const Mul &x) { return is_rational_expression(x.lhs) && is_rational_expression(x.rhs); },
                          [](const Div &x) { return is_rational_expression(x.lhs) && is_rational_expression(x.rhs); },
                          [](const Pow &x) { return is_rational_expression(x.base); },
                          [](const Neg &x) { return is_rational_expression(x.arg); },
                          [](const auto &) { return true; },
                      },
                      e.node().kind);
}

Expr substitute(const Expr &e, const std::map<std::string, Expr> &definitions)
{
    const auto pos = e.position();
    auto sub = [&](const Expr &x) { return substitute(x, definitions); };
    return std::visit(overloaded{
                          [&](const Var &x) {
                              const auto it = definitions.find(x.name);
                              return it == definitions.end() ? e : it->second;
                          },
                          [&](const Add &x) { return Expr::sum(sub(x.lhs), sub(x.rhs), pos); },
                          [&](const Sub &x) { return Expr::difference(sub(x.lhs), sub(x.rhs), pos); },
                          [&](const Mul &x) { return Expr::product(sub(x.lhs), sub(x.rhs), pos); },
                          [&](const Div &x) { return Expr::quotient(sub(x.lhs), sub(x.rhs), pos); },
                          [&](const Pow &x) { return Expr::power(sub(x.base), x.exponent, pos); },
                          [&](const Sqrt &x) { return Expr::sqrt(sub(x.arg), pos); },
                          [&](const St &x) { return Expr::st(sub(x.arg), pos); },
                          [&](const Neg &x) { return Expr::negate(sub(x.arg), pos); },
                          [&](const auto &) { return e; },
                      },
                      e.node().kind);
}

} // namespace leibniz::dsl
