#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aslkit::cli {

// Runs the aslcheck command line. The JSON report (or DOT text) goes to
// `out` unless --out names a file; the human summary and errors go to `err`.
// Returns 0 iff every check passed, 1 if some check failed, 2 on usage or
// input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aslkit::cli
