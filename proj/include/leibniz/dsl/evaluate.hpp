#ifndef LEIBNIZ_DSL_EVALUATE_HPP
#define LEIBNIZ_DSL_EVALUATE_HPP

#include <map>
#include <string>

#include <leibniz/dsl/expr.hpp>
#include <leibniz/lc_number.hpp>

namespace leibniz::dsl
{

using Bindings = std::map<std::string, LcNumber>;

// Maps every node to the corresponding series operation. Constants, eps and
// H are built at `precision`; St re-embeds the standard part as a real.
// Arithmetic errors are rethrown carrying the offending node's position.
LcNumber evaluate(const Expr &e, const Bindings &env, int precision = default_precision);

} // namespace leibniz::dsl

#endif
