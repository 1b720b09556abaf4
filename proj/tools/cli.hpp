#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cutideal::cli {

// Runs one command; `args` excludes the program name.
// Exit status: 0 success, 1 verification failure or non-member, 2 bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cutideal::cli
