#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dtroots::cli {

/// Exit codes of the command-line tool.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;  // invalid tuple or violated check
inline constexpr int kUsage = 2;

/// Runs one command line (args excludes the program name). `in` supplies the
/// data set literal for validate/genus when none is given as an argument.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace dtroots::cli
