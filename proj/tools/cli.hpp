#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace idim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitInvariant = 2;

// Runs one command. args excludes the program name. Command output goes to
// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace idim::cli
