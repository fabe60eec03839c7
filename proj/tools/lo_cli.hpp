#pragma once

#include <iosfwd>

// Runs one CLI invocation; returns the process exit code (0 success,
// 2 validation/usage error, 3 capacity error).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
