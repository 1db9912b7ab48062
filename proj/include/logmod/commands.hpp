#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logmod/io.hpp"

namespace logmod::io {

struct CommandOptions {
  bool oracle = false;
  bool want_dot = false;
  bool parallel = true;
};

enum class OracleStatus { NotRequested, Agree, NotApplicable };

struct CommandResult {
  Json output;
  int exit_code = 0;
  OracleStatus oracle = OracleStatus::NotRequested;
  std::optional<std::string> dot;
};

const std::vector<std::string>& command_names();

/// Ambient rank bound from LOGMODKIT_MAX_RANK (default 4).
std::size_t max_rank();

/// Runs one command on one JSON document. Never throws: failures become an
/// {"error","message"} document with exit code 1 (domain) or 2 (parse,
/// validation, unknown command).
CommandResult run_command(const std::string& name, std::string_view input, const CommandOptions& opts = {});
CommandResult run_command(const std::string& name, const Document& input, const CommandOptions& opts = {});

/// Maps run_command over the non-blank lines of `input`, preserving order.
std::vector<CommandResult> run_batch(const std::string& name, std::string_view input, const CommandOptions& opts);

} // namespace logmod::io
