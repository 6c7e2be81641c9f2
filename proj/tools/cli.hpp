#ifndef DIORACE_TOOLS_CLI_HPP
#define DIORACE_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "diorace/race.hpp"

namespace diorace::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUndecided = 2;

/// Runs one invocation; args excludes the program name. Results go to
/// `out`, diagnostics and traces to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "key: value" lines for the text mode of decide.
std::string format_outcome_text(const Outcome& o);

}  // namespace diorace::cli

#endif
