#ifndef GDS_TOOLS_EVIDENCE_CLI_HPP
#define GDS_TOOLS_EVIDENCE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace gds::cli {

/// Runs the evidence CLI on the given arguments (program name excluded).
/// Returns the process exit code: 0 on success, 1 on input or validation
/// errors, 2 when a fusion is singular (conflict coefficient K = 1).
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gds::cli

#endif  // GDS_TOOLS_EVIDENCE_CLI_HPP
