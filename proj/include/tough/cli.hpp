#pragma once

#include <ostream>

namespace tough {

/// Exit codes: 0 success / accepted, 1 certificate rejected, 2 usage, I/O or
/// parse error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tough
