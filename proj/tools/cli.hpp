#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperdec::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kDomain = 3,
  kUltrafilterDependent = 4,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperdec::cli
