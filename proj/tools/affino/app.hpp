// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace affino::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInputError = 2,
  kResourceLimit = 3,
};

/// Runs one CLI invocation. `args` excludes the program name. The graph
/// document is read from --input, or from `in` when absent. One JSON object
/// is written to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace affino::cli
