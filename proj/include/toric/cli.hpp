#pragma once

#include <ostream>

namespace toric {

/// Runs the command line. Returns 0 on success, 1 on domain errors and 2 on
/// usage errors, including malformed mosaic codes.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace toric
