#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lazyasp {

// Full command-line front end: parses flags and program files, runs the
// solver, prints answer sets to `out` and statistics to `err`.  Returns the
// process exit code: 0 for answer sets found or a clean UNSATISFIABLE
// report, 1 for usage or input errors, 2 for internal errors.  `args`
// excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lazyasp
