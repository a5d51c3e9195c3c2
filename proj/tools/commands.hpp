#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace akt {

enum Exit : int { Ok = 0, Usage = 1, Invalid = 2, CheckFailed = 3 };

/// Runs one command line (args excludes the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace akt
