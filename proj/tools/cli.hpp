#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace seidel::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kValidation = 2,
  kMismatch = 3,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seidel::cli
