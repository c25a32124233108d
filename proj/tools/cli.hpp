#pragma once

#include <iosfwd>

namespace ecc::cli {

// Exit codes: 0 ok, 1 a check failed, 2 bad input / usage / I/O, 3 disconnected graph.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ecc::cli
