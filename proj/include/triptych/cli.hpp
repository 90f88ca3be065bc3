#pragma once

#include <iosfwd>

namespace triptych::cli {

enum ExitCode { ok = 0, usage = 1, data = 2, numeric = 3 };

// Runs the command line front end. Reads CSV from `in` when no input file is
// named; results go to `out` unless --out is given.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace triptych::cli
