#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fcd {

// Runs the command-line front end. Exit codes: 0 success, 1 domain error
// (bad diagram, unknown chord), 2 usage error, 3 failed four-term
// verification. All errors go to `err` with an "error:" prefix.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace fcd
