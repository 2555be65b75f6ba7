#ifndef K3GON_CLI_HPP
#define K3GON_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace k3gon::cli {

/// Runs the k3gon command line given argv-style arguments (without the
/// program name). Returns the process exit code: 0 success, 2 bad
/// arguments/config, 3 internal invariant violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace k3gon::cli

#endif
