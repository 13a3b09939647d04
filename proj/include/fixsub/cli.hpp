#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fixsub {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitCertificate = 3;
inline constexpr int kExitBudget = 4;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fixsub
