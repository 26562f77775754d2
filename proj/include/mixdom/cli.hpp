#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mixdom::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotDominating = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitUnproved = 3;

// Runs the `mixdom` command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mixdom::cli
