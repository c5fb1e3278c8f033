#include <leibniz/dsl/parser.hpp>

#include <cctype>
#include <optional>

#include <leibniz/error.hpp>

namespace leibniz::dsl
{

const char *token_kind_name(TokenKind kind)
{
    switch (kind) {
        case TokenKind::number:
            return "number";
        case TokenKind::identifier:
            return "identifier";
        case TokenKind::plus:
            return "'+'";
        case TokenKind::minus:
            return "'-'";
        case TokenKind::star:
            return "'*'";
        case TokenKind::slash:
            return "'/'";
        case TokenKind::caret:
            return "'^'";
        case TokenKind::lparen:
            return "'('";
        case TokenKind::rparen:
            return "')'";
        case TokenKind::comma:
            return "','";
    }
    return "?";
}

namespace
{

bool is_digit(char c)
{
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

bool is_ident_start(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

bool is_ident_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

} // namespace

std::vector<Token> tokenize(std::string_view source)
{
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < source.size()) {
        const char c = source[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (is_digit(c)) {
            while (i < source.size() && is_digit(source[i])) {
                ++i;
            }
            if (i < source.size() && source[i] == '.') {
                ++i;
                if (i >= source.size() || !is_digit(source[i])) {
                    throw Error(ErrorKind::LexError, "malformed number, expected a digit after '.'", i);
                }
                while (i < source.size() && is_digit(source[i])) {
                    ++i;
                }
            }
            if (i < source.size() && (source[i] == '.' || is_ident_start(source[i]))) {
                throw Error(ErrorKind::LexError, "malformed number", i);
            }
            tokens.push_back({TokenKind::number, std::string(source.substr(start, i - start)), start});
            continue;
        }
        if (is_ident_start(c)) {
            while (i < source.size() && is_ident_char(source[i])) {
                ++i;
            }
            tokens.push_back({TokenKind::identifier, std::string(source.substr(start, i - start)), start});
            continue;
        }
        TokenKind kind;
        switch (c) {
            case '+':
                kind = TokenKind::plus;
                break;
            case '-':
                kind = TokenKind::minus;
                break;
            case '*':
                kind = TokenKind::star;
                break;
            case '/':
                kind = TokenKind::slash;
                break;
            case '^':
                kind = TokenKind::caret;
                break;
            case '(':
                kind = TokenKind::lparen;
                break;
            case ')':
                kind = TokenKind::rparen;
                break;
            case ',':
                kind = TokenKind::comma;
                break;
            default:
                throw Error(ErrorKind::LexError, std::string("unexpected character '") + c + "'", i);
        }
        tokens.push_back({kind, std::string(1, c), start});
        ++i;
    }
    return tokens;
}

namespace
{

class Parser
{
public:
    Parser(const std::vector<Token> &tokens, std::size_t end) : m_tokens(tokens), m_end(end) {}

    Expr parse_all()
    {
        Expr e = expr();
        if (const Token *t = peek()) {
            fail("end of input", t->position);
        }
        return e;
    }

private:
    const Token *peek(std::size_t ahead = 0) const
    {
        const std::size_t k = m_index + ahead;
        return k < m_tokens.size() ? &m_tokens[k] : nullptr;
    }

    bool at(TokenKind kind, std::size_t ahead = 0) const
    {
        const Token *t = peek(ahead);
        return t != nullptr && t->kind == kind;
    }

    std::size_t here() const
    {
        const Token *t = peek();
        return t != nullptr ? t->position : m_end;
    }

    [[noreturn]] void fail(const std::string &expected, std::size_t position) const
    {
        const Token *t = peek();
        const std::string found = t != nullptr ? "'" + t->text + "'" : "end of input";
        throw Error(ErrorKind::ParseError, "expected " + expected + ", found " + found, position);
    }

    const Token &expect(TokenKind kind)
    {
        if (!at(kind)) {
            fail(token_kind_name(kind), here());
        }
        return m_tokens[m_index++];
    }

    Expr expr()
    {
        Expr lhs = term();
        while (at(TokenKind::plus) || at(TokenKind::minus)) {
            const Token &op = m_tokens[m_index++];
            Expr rhs = term();
            lhs = op.kind == TokenKind::plus ? Expr::sum(lhs, rhs, op.position) : Expr::difference(lhs, rhs, op.position);
        }
        return lhs;
    }

    Expr term()
    {
        Expr lhs = unary();
        while (at(TokenKind::star) || at(TokenKind::slash)) {
            const Token &op = m_tokens[m_index++];
            Expr rhs = unary();
            lhs = op.kind == TokenKind::star ? Expr::product(lhs, rhs, op.position) : Expr::quotient(lhs, rhs, op.position);
        }
        return lhs;
    }

    Expr unary()
    {
        if (at(TokenKind::minus)) {
            const std::size_t pos = m_tokens[m_index++].position;
            const bool literal = at(TokenKind::number);
            Expr arg = unary();
            // "-p/q" written directly is a negative literal
            if (const Const *c = arg.as<Const>(); literal && c != nullptr) {
                return Expr::constant(-c->value, pos);
            }
            return Expr::negate(arg, pos);
        }
        return power();
    }

    Expr power()
    {
        Expr base = atom();
        if (!at(TokenKind::caret)) {
            return base;
        }
        const std::size_t pos = m_tokens[m_index++].position;
        bool negative = false;
        if (at(TokenKind::minus)) {
            negative = true;
            ++m_index;
        }
        const auto exponent = integer_literal();
        if (!exponent) {
            fail("integer exponent", here());
        }
        ++m_index;
        return Expr::power(base, negative ? -*exponent : *exponent, pos);
    }

    std::optional<long> integer_literal() const
    {
        const Token *t = peek();
        if (t == nullptr || t->kind != TokenKind::number || t->text.find('.') != std::string::npos) {
            return std::nullopt;
        }
        const auto q = Rational::parse(t->text);
        if (!q || !q->to_long()) {
            return std::nullopt;
        }
        return q->to_long();
    }

    Expr atom()
    {
        const Token *t = peek();
        if (t == nullptr) {
            fail("expression", m_end);
        }
        const std::size_t pos = t->position;
        switch (t->kind) {
            case TokenKind::number: {
                Rational value = Rational::from_string(t->text);
                ++m_index;
                // rational literal p/q, unless q carries an exponent
                if (at(TokenKind::slash) && at(TokenKind::number, 1) && !at(TokenKind::caret, 2)) {
                    const Rational den = Rational::from_string(peek(1)->text);
                    if (!den.is_zero()) {
                        m_index += 2;
                        value /= den;
                    }
                }
                return Expr::constant(value, pos);
            }
            case TokenKind::identifier: {
                const std::string name = t->text;
                ++m_index;
                if (name == "eps") {
                    return Expr::eps(pos);
                }
                if (name == "H") {
                    return Expr::infinite_unit(pos);
                }
                if (name == "sqrt" || name == "st") {
                    expect(TokenKind::lparen);
                    Expr arg = expr();
                    expect(TokenKind::rparen);
                    return name == "sqrt" ? Expr::sqrt(arg, pos) : Expr::st(arg, pos);
                }
                return Expr::variable(name, pos);
            }
            case TokenKind::lparen: {
                ++m_index;
                Expr inner = expr();
                expect(TokenKind::rparen);
                return inner;
            }
            default:
                fail("number, identifier or '('", pos);
        }
    }

    const std::vector<Token> &m_tokens;
    std::size_t m_end;
    std::size_t m_index = 0;
};

} // namespace

Expr parse(const std::vector<Token> &tokens, std::size_t source_length)
{
    return Parser(tokens, source_length).parse_all();
}

Expr parse(std::string_view source)
{
    return parse(tokenize(source), source.size());
}

} // namespace leibniz::dsl
