#pragma once

#include <iosfwd>

namespace gfc {

inline constexpr const char* kVersion = "1.0.0";

// Entry point of the `gfc` tool. Exit code 0 iff every embedded check passed;
// 1 for a failed check; 2 for usage or parameter errors.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace gfc
