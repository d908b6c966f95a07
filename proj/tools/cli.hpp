#ifndef CRN_TOOLS_CLI_HPP
#define CRN_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace crn::cli {

// Exit codes.
inline constexpr int kOk = 0;        // success or affirmative verdict
inline constexpr int kNegative = 1;  // negative verdict, no certificate, failed precondition
inline constexpr int kUsage = 2;     // bad arguments, unreadable input, parse error
inline constexpr int kInternal = 3;  // unlucky specialization or unexpected failure

/// Runs the tool; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crn::cli

#endif
