#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dtuple {

// Dispatches one CLI invocation. args excludes the program name.
// Exit status: 0 on success (a failed verification is a successful
// computation), 1 on domain error, 2 on usage error. Results go to out,
// diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace dtuple
