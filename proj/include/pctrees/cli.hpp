#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pctrees::cli {

/// Process exit codes. Stable; scripts depend on them.
enum ExitCode : int {
  kOk = 0,
  kIoOrParse = 1,
  kInvalid = 2,
  kDisconnected = 3,
  kZeroReliability = 4,
  kIncompatibleMethod = 5,
  kTooManyTrees = 6,
};

/// Runs `pctrees <args...>` (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pctrees::cli
