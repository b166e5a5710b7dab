#pragma once

#include <stop_token>
#include <string>
#include <vector>

namespace rotary::cli {

struct Result {
  int exit_code = 0;
  std::string out;  // one JSON document, or help text
};

/// Runs one command. `args` excludes the program name. Exit codes: 0 ok,
/// 1 domain error, 2 usage error, 130 cancelled.
Result run(const std::vector<std::string>& args, std::stop_token stop = {});

}  // namespace rotary::cli
