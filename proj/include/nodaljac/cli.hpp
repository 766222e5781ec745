#ifndef NODALJAC_CLI_HPP
#define NODALJAC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace nodaljac {

/// Runs one CLI command. `args` excludes the program name. Returns the
/// process exit code: 0 success, 1 usage error, 2 validation or math
/// error, 3 I/O error.
int cli_dispatch(std::vector<std::string> args, std::ostream& out,
                 std::ostream& err);

} // namespace nodaljac

#endif
