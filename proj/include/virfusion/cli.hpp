#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace virfusion::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitDisagreement = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace virfusion::cli
