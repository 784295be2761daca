#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lexineq::cli {

/// Exit codes: 0 success, 1 usage/parse/classification error,
/// 2 verification mismatch (solve --verify) or a failed law run.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lexineq::cli
