#pragma once

#include <ostream>

namespace glcaps {

// Runs one command line. Output is written to `out` only on success.
// Exit codes: 0 success, 1 malformed input, 2 violated precondition.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace glcaps
