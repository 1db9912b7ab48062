#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace logmod {

/// Stable error identifiers. The names returned by `error_name` are part of
/// the CLI contract and must not change.
enum class ErrorCode {
  DimensionMismatch,
  NotPointed,
  NotAFace,
  NotSaturated,
  SubgroupNotContained,
  IllFormedHom,
  BaseMismatch,
  EmptyIdeal,
  NotAnExtension,
  GroupMismatch,
  InvalidSubcone,
  NotRefining,
  IncompatibleSubdivision,
  EmptyStratification,
  InvalidInput,
  ParseError,
  ValidationError,
  UnknownCommand,
  OracleMismatch,
  InternalError,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
    : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what)
{
  throw Error(code, what);
}

/// Internal postcondition check; throws InternalError rather than aborting so
/// the CLI can report it.
inline void ensure(bool cond, const char* what)
{
  if (!cond)
    throw Error(ErrorCode::InternalError, what);
}

} // namespace logmod
