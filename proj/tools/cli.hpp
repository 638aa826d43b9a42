#pragma once

#include <functional>
#include <map>
#include <ostream>
#include <string>

namespace gramquad::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

using Integrand = std::function<double(double)>;

/// Named integrands available to `integrate --builtin`.
const std::map<std::string, Integrand>& builtin_functions();

/// Parses argv (argv[0] is the program name) and runs one subcommand:
/// weights, integrate, check or compare. Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gramquad::cli
