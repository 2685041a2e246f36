#pragma once

#include <ostream>

namespace difflin {

// Entry point of the difflin tool. Exit codes: 0 clean, 1 check failures
// or inequality, 2 usage, configuration, parse or type errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace difflin
