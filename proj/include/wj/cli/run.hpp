#pragma once

// The `wj` command: subcommands print one JSON report to `out`.
// Exit status 0 on success, 2 on bad input, 1 on internal failure.

#include <ostream>
#include <string>
#include <vector>

namespace wj::cli {

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wj::cli
