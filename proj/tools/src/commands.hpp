#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace turan::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitConvergence = 3;
inline constexpr int kExitCertificationFailed = 4;

/// Runs the command line `args` (without the program name). Regular output
/// goes to `out`, diagnostics to `err`; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "3", "1..5" or "1,2,7" (ranges inclusive).
std::vector<long long> parse_int_list(const std::string& text);

/// "0.5", "5,10,20,40" or "a..b" stepping by `step`.
std::vector<double> parse_real_list(const std::string& text, double step = 1.0);

}  // namespace turan::cli
