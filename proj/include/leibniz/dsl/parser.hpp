#ifndef LEIBNIZ_DSL_PARSER_HPP
#define LEIBNIZ_DSL_PARSER_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <leibniz/dsl/expr.hpp>

namespace leibniz::dsl
{

enum class TokenKind { number, identifier, plus, minus, star, slash, caret, lparen, rparen, comma };

const char *token_kind_name(TokenKind kind);

struct Token {
    TokenKind kind;
    std::string text;
    std::size_t position;

    friend bool operator==(const Token &, const Token &) = default;
};

// Throws Error{LexError} at the first byte that cannot start or continue a
// token. Numbers are digit strings with an optional fractional part.
std::vector<Token> tokenize(std::string_view source);

// Grammar:
//   expr   := term (("+" | "-") term)*
//   term   := unary (("*" | "/") unary)*
//   unary  := "-" unary | power
//   power  := atom ("^" "-"? int)?
//   atom   := rational | ident | "eps" | "H" | "sqrt" "(" expr ")"
//           | "st" "(" expr ")" | "(" expr ")"
//   rational := number ("/" number)?
// A literal "p/q" folds into one constant unless q is itself raised to a
// power, so "2/3^2" stays 2/(3^2). A minus sign directly before such a
// literal makes it a negative constant; "-3^2" is still -(3^2).
// Throws Error{ParseError}.
Expr parse(const std::vector<Token> &tokens, std::size_t source_length);
Expr parse(std::string_view source);

} // namespace leibniz::dsl

#endif
