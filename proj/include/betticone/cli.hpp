#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace betticone {

inline constexpr const char* kVersion = "0.1.0";

/// Runs one command line (arguments after the program name). Returns 0 on
/// success, 1 on domain errors, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace betticone
