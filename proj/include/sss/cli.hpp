#pragma once

#include <ostream>

namespace sss {

/// Front end; returns the process exit code (0 positive verdict, 1 negative
/// verdict, 2 invalid input).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sss
