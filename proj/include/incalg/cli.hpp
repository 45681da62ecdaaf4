#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace incalg {

/// Exit codes: 0 true / pass, 1 false with witness / failing suite,
/// 2 error or not applicable.
inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitError = 2;

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace incalg
