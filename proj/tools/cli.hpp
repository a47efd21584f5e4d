// The latknot command line, callable in-process so tests can capture output.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace latknot::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // validation or assertion failure
inline constexpr int kExitUsage = 2;    // bad flags or unparsable input

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latknot::cli
