#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace acm::cli {

/// Exit statuses of run().
enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kResource = 3,
  kCheckFailed = 4,  // oracle mismatch or broken internal invariant
};

/// Runs one command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace acm::cli
