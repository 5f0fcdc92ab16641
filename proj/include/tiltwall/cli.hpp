#pragma once

#include <ostream>

namespace tiltwall {

/// Runs the command line; returns 0 on success or pass, 1 when a requested
/// check fails and 2 on invalid input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tiltwall
