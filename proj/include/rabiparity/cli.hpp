#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rabiparity::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

// Runs one invocation. args excludes the program name. Results go to out
// (or --out FILE); diagnostics go to err as single "error: ..." lines.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace rabiparity::cli
