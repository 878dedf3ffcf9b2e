#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nodal::cli {

/// Parses arguments, runs one command and writes its report to `out` (or to
/// the --output file). Returns 0 on pass/info, 1 on a failed check, 2 on a
/// usage or domain error.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

/// Same as above with argv[0] omitted; convenient for tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nodal::cli
