#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace l2bs {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr unsigned long long kDefaultSeed = 20140101ULL;

/// Runs one command line (without the program name). Writes the JSON report to `out`
/// or a JSON error to `err`; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(const std::string& data);

}  // namespace l2bs
