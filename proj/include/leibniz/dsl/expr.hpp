#ifndef LEIBNIZ_DSL_EXPR_HPP
#define LEIBNIZ_DSL_EXPR_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <variant>

#include <leibniz/rational.hpp>

namespace leibniz::dsl
{

struct Node;
struct ExprFactory;

// Immutable, shareable expression tree. Each node remembers the byte offset
// of the source text it was parsed from (0 for programmatically built trees).
class Expr
{
public:
    static Expr constant(const Rational &value, std::size_t position = 0);
    static Expr variable(std::string name, std::size_t position = 0);
    static Expr eps(std::size_t position = 0);
    static Expr infinite_unit(std::size_t position = 0);
    static Expr sum(Expr lhs, Expr rhs, std::size_t position = 0);
    static Expr difference(Expr lhs, Expr rhs, std::size_t position = 0);
    static Expr product(Expr lhs, Expr rhs, std::size_t position = 0);
    static Expr quotient(Expr lhs, Expr rhs, std::size_t position = 0);
    static Expr power(Expr base, long exponent, std::size_t position = 0);
    static Expr sqrt(Expr arg, std::size_t position = 0);
    static Expr st(Expr arg, std::size_t position = 0);
    static Expr negate(Expr arg, std::size_t position = 0);

    const Node &node() const
    {
        return *m_node;
    }
    std::size_t position() const;

    template <typename T>
    const T *as() const;

    // Structural equality; source positions are ignored.
    friend bool operator==(const Expr &a, const Expr &b);

    friend Expr operator+(Expr a, Expr b)
    {
        return sum(std::move(a), std::move(b));
    }
    friend Expr operator-(Expr a, Expr b)
    {
        return difference(std::move(a), std::move(b));
    }
    friend Expr operator*(Expr a, Expr b)
    {
        return product(std::move(a), std::move(b));
    }
    friend Expr operator/(Expr a, Expr b)
    {
        return quotient(std::move(a), std::move(b));
    }
    Expr operator-() const
    {
        return negate(*this);
    }

private:
    friend struct ExprFactory;
    explicit Expr(std::shared_ptr<const Node> node) : m_node(std::move(node)) {}

    std::shared_ptr<const Node> m_node;
};

struct Const {
    Rational value;
};
struct Var {
    std::string name;
};
struct Eps {
};
struct HUnit {
};
struct Add {
    Expr lhs, rhs;
};
struct Sub {
    Expr lhs, rhs;
};
struct Mul {
    Expr lhs, rhs;
};
struct Div {
    Expr lhs, rhs;
};
struct Pow {
    Expr base;
    long exponent;
};
struct Sqrt {
    Expr arg;
};
struct St {
    Expr arg;
};
struct Neg {
    Expr arg;
};

struct Node {
    using Kind = std::variant<Const, Var, Eps, HUnit, Add, Sub, Mul, Div, Pow, Sqrt, St, Neg>;

    Kind kind;
    std::size_t position = 0;
};

template <typename T>
const T *Expr::as() const
{
    return std::get_if<T>(&m_node->kind);
}

template <typename... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <typename... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

bool is_reserved_word(const std::string &name);

// Fully parenthesised rendering that parses back to the same tree.
std::string to_string(const Expr &e);

std::set<std::string> free_variables(const Expr &e);

// True when the tree has no Sqrt or St node.
bool is_rational_expression(const Expr &e);

// Replaces every Var whose name is a key of `definitions`.
Expr substitute(const Expr &e, const std::map<std::string, Expr> &definitions);

} // namespace leibniz::dsl

#endif
