#include <leibniz/error.hpp>

namespace leibniz
{

const char *kind_name(ErrorKind kind)
{
    switch (kind) {
        case ErrorKind::DivisionByZero:
            return "DivisionByZero";
        case ErrorKind::NegativeLeadingCoefficient:
            return "NegativeLeadingCoefficient";
        case ErrorKind::IrrationalRoot:
            return "IrrationalRoot";
        case ErrorKind::InfiniteOperand:
            return "InfiniteOperand";
        case ErrorKind::PrecisionExhausted:
            return "PrecisionExhausted";
        case ErrorKind::LexError:
            return "LexError";
        case ErrorKind::ParseError:
            return "ParseError";
        case ErrorKind::UnboundVariable:
            return "UnboundVariable";
        case ErrorKind::UnknownVariable:
            return "UnknownVariable";
        case ErrorKind::NonRationalNode:
            return "NonRationalNode";
        case ErrorKind::UnsupportedNode:
            return "UnsupportedNode";
        case ErrorKind::NotFinite:
            return "NotFinite";
        case ErrorKind::ChainBroken:
            return "ChainBroken";
    }
    return "Error";
}

namespace
{

std::string compose(ErrorKind kind, const std::string &message, const std::optional<std::size_t> &position)
{
    std::string out = kind_name(kind);
    if (position) {
        out += " at position " + std::to_string(*position);
    }
    if (!message.empty()) {
        out += ": " + message;
    }
    return out;
}

} // namespace

Error::Error(ErrorKind kind, const std::string &message, std::optional<std::size_t> position)
    : std::runtime_error(compose(kind, message, position)), m_kind(kind), m_detail(message), m_position(position)
{
}

} // namespace leibniz
