#ifndef BIMONO_CLI_HPP
#define BIMONO_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bimono::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1; ///< computation error or fixture mismatch
inline constexpr int exit_usage = 2;

/// Runs one invocation; args[0] is the program name. "-" as a path means
/// `in` (inputs) or `out` (outputs).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace bimono::cli

#endif
