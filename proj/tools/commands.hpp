#pragma once

#include <iosfwd>

namespace momentforge::cli {

/// Full command-line entry point; returns the process exit status
/// (0 ok, 1 internal error, 2 validation/usage error, 3 cap exceeded).
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace momentforge::cli
