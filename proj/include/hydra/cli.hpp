#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace hydra::cli {

enum class Status { Ok, NotMember, ParseError, BudgetExceeded, Undecided, InternalError };

int exit_code(Status status);
std::string to_string(Status status);

struct CommandResult {
  Status status = Status::Ok;
  nlohmann::ordered_json payload = nlohmann::ordered_json::object();
  std::string text;
  bool json = false;
  bool help = false;
};

// args excludes the program name.
CommandResult run(const std::vector<std::string>& args);

// Writes the result the way the executable does and returns its exit code.
int emit(const CommandResult& result, std::ostream& out, std::ostream& err);

}  // namespace hydra::cli
