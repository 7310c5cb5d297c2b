#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sesqui::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;

/// Runs one command line. `args` excludes the program name. The report is
/// written to `out` (or the --out file) in one piece once it is complete;
/// diagnostics and usage text go to `err`. `in` backs `--file -`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sesqui::cli
