#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qlab::cli {

enum ExitCode { kAllPass = 0, kFailure = 1, kUsage = 2 };

// Entry point shared by the executable and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qlab::cli
