#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rimfloer::cli {

[[nodiscard]] const char *version() noexcept;

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 domain error, 2 parse or usage error.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace rimfloer::cli
