#pragma once

#include <map>
#include <string>
#include <vector>

namespace zetacomb {

// Parsed command line: the subcommand, its flags as given (key with leading
// dashes -> raw value string), and the input/output paths when present.
struct CommandInvocation {
    std::string subcommand;
    std::map<std::string, std::string> flags;
    std::string input_path;
    std::string output_path;
};

// Parses args (program name excluded) and runs the subcommand.
// Exit codes: 0 success / suite passed, 1 suite failed, 2 usage or path
// problem, 3 computation failure (diagnostic on standard error).
int dispatch(const std::vector<std::string>& args);

} // namespace zetacomb
