#pragma once

#include <string>
#include <vector>

namespace concordia::api {

struct CommandResult {
  int exit_code = 0;   // 0 ok, 1 domain error, 2 usage error
  std::string output;  // JSON document, or the human rendering with --pretty
};

// args excludes the program name.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace concordia::api
