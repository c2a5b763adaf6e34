#ifndef QUDIT_CLI_HPP
#define QUDIT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qudit {

// Runs the command-line front end. args excludes the program name.
// Exit codes: 0 success / all checks passed, 1 verification failure,
// 2 usage error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qudit

#endif
