#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcrystal {

// Runs one CLI invocation. Returns the process exit code:
//   0 success, 1 invalid input, 2 verification failure / input outside an image.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcrystal
