#pragma once

#include <ostream>

namespace ncsym::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kVerificationFailed = 3, kInternal = 4 };

/// Runs one command line. Results go to `out`; errors go to `err` as a single
/// JSON line {"error": code, "message": text}.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ncsym::cli
