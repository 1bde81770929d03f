#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tribound {

// Runs one CLI invocation.  `args` excludes the program name.  All results
// go to `out`, all diagnostics to `err`.  Exit codes: 0 success, 1 usage
// error, 2 validation error, 3 unannotated check mismatch.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tribound
