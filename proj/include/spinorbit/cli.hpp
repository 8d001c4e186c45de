// Command-line front end: `certify`, `fourier` and `orbit` subcommands.
//
// Exit codes: 0 success (every selected body certified), 1 a body failed
// certification or could not be solved, 2 usage, I/O or parse errors.
#pragma once

#include <iosfwd>

namespace spinorbit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNotCertified = 1;
inline constexpr int kExitUsage = 2;

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace spinorbit::cli
