#ifndef QWZETA_COMMANDS_HPP
#define QWZETA_COMMANDS_HPP

#include <ostream>

namespace qwzeta {

// Exit codes of the command-line tool.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitRuntimeError = 1;
inline constexpr int kExitVerificationFailure = 2;

/// Parses argv and runs one subcommand (zeta, spectrum, ihara, periodic,
/// verify). Output goes to `out`, diagnostics and usage text to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qwzeta

#endif  // QWZETA_COMMANDS_HPP
