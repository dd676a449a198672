#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace extcover {

// Batch front end; returns the process exit code.
// 0 success, 2 usage, 3 file/format, 4 solver refusal;
// with --quiet: 10 = YES, 11 = NO.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace extcover
