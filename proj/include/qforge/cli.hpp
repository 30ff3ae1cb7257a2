#ifndef QFORGE_CLI_HPP
#define QFORGE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qforge {

// Entry point of the qforge tool.  Returns the process exit code:
//   0  success (every check passed / expansion printed / correction found)
//   1  honest negative (a check failed / no correction in the range)
//   2  usage, parse, or evaluation errors
// The environment variable QFORGE_MAX_ORDER (default 16) caps every series
// truncation order the tool will accept.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace qforge

#endif  // QFORGE_CLI_HPP
