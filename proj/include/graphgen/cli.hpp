#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace graphgen::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kInvalid = 2;
inline constexpr int kCeiling = 3;
inline constexpr int kCacheError = 4;
inline constexpr int kIoError = 5;

/// Runs one command. args excludes the program name, e.g.
/// {"gen", "--family", "connected", "--n", "2", "--k", "1"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphgen::cli
