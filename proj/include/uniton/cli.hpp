#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace uniton {

// Exit codes: 0 all checks pass, 1 a check failed, 2 input error,
// 3 internal assertion.
enum ExitCode { kExitPass = 0, kExitFail = 1, kExitInput = 2, kExitInternal = 3 };

// args excludes the program name. The JSON certificate goes to --out when
// given (to stdout for mesh, whose --out receives the mesh) and to out
// otherwise.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace uniton
