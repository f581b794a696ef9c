#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace paracyclic::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kMalformedInput = 2,
  kIdentityFailure = 3,
  kUnsupported = 4,
};

// Runs one invocation; args excludes the program name. Everything the
// command prints goes to `out` (or the --output file) and diagnostics to
// `err`, so the function is usable in-process from tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace paracyclic::cli
