#ifndef SIGMA_HARNESS_COMMANDS_HPP
#define SIGMA_HARNESS_COMMANDS_HPP

#include <iosfwd>

#include "harness/config.hpp"

namespace sigma::harness {

// Exit codes of the command dispatcher.
inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_mismatch = 1;
inline constexpr int exit_oracle_failure = 2;
inline constexpr int exit_io_error = 3;
inline constexpr int exit_invalid_config = 4;

// Executes one subcommand and returns its exit status. All failures are
// reported on `err` and folded into the exit code; nothing escapes.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace sigma::harness

#endif  // SIGMA_HARNESS_COMMANDS_HPP
