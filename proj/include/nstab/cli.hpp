#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nstab::cli {

// Entry point behind main(); split out so tests can drive the full command
// path and capture output. Returns the process exit code:
//   0  every requested check passed
//   1  a check failed
//   2  the request itself was invalid (unknown family, c out of range, ...)
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace nstab::cli
