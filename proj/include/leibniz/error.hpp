#ifndef LEIBNIZ_ERROR_HPP
#define LEIBNIZ_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace leibniz
{

enum class ErrorKind {
    DivisionByZero,
    NegativeLeadingCoefficient,
    IrrationalRoot,
    InfiniteOperand,
    PrecisionExhausted,
    LexError,
    ParseError,
    UnboundVariable,
    UnknownVariable,
    NonRationalNode,
    UnsupportedNode,
    NotFinite,
    ChainBroken,
};

const char *kind_name(ErrorKind kind);

// Single exception type for the library; the kind says what went wrong and
// the position, when present, is a byte offset into the DSL source.
class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string &message, std::optional<std::size_t> position = std::nullopt);

    ErrorKind kind() const
    {
        return m_kind;
    }
    const std::optional<std::size_t> &position() const
    {
        return m_position;
    }
    const std::string &detail() const
    {
        return m_detail;
    }

    Error with_position(std::size_t position) const
    {
        return Error(m_kind, m_detail, position);
    }

private:
    ErrorKind m_kind;
    std::string m_detail;
    std::optional<std::size_t> m_position;
};

} // namespace leibniz

#endif
