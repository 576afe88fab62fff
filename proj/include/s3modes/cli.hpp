#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace s3modes::cli {

/// Exit codes: 0 success, 1 numerical failure (a verify tolerance breach),
/// 2 invalid arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace s3modes::cli
