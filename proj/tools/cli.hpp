#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace romdom::cli {

// Exit codes: 0 success / yes, 1 no, 2 usage or input error.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name. A graph file named "-" is read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace romdom::cli
