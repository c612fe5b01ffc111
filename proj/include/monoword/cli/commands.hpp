#pragma once

// Command-line front end. Exit status: 0 success, 1 validation failure or
// numerical failure, 2 usage error (including budget refusals).

#include <ostream>
#include <string>
#include <vector>

namespace monoword::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace monoword::cli
