#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gaindoublet {

// Exit codes: 0 success, 1 usage/configuration error, 2 computation error.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitComputation = 2 };

int run_cli(int argc, char** argv);
// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gaindoublet
