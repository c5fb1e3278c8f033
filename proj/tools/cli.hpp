#ifndef LEIBNIZ_TOOLS_CLI_HPP
#define LEIBNIZ_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace leibniz::cli
{

namespace exit_code
{
inline constexpr int ok = 0;
inline constexpr int usage = 2;
inline constexpr int evaluation = 3;
inline constexpr int claim_failed = 4;
} // namespace exit_code

// Runs the command line `args` (without the program name). Reads REPL input
// from `in`; prints a prompt only when `interactive`.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err,
        bool interactive = false);

} // namespace leibniz::cli

#endif
