#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abelkit::cli {

// Exit codes
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kNumeric = 2;

// Runs one command line; results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace abelkit::cli
