#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace flagphase::cli {

enum ExitCode : int { kOk = 0, kParseError = 1, kDomainError = 2, kBoundaryAmbiguous = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flagphase::cli
