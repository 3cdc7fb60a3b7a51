#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace votemap {

inline constexpr const char* kVersion = "0.1.0";

// Command-line driver. Returns 0 on success, 2 on usage errors and 1 when the
// computation itself fails (bad parameters, unreadable input, caps exceeded).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace votemap
