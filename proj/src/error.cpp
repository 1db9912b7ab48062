#include "logmod/error.hpp"

namespace logmod {

std::string_view error_name(ErrorCode code)
{
  switch (code) {
  case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  case ErrorCode::NotPointed: return "NotPointed";
  case ErrorCode::NotAFace: return "NotAFace";
  case ErrorCode::NotSaturated: return "NotSaturated";
  case ErrorCode::SubgroupNotContained: return "SubgroupNotContained";
  case ErrorCode::IllFormedHom: return "IllFormedHom";
  case ErrorCode::BaseMismatch: return "BaseMismatch";
  case ErrorCode::EmptyIdeal: return "EmptyIdeal";
  case ErrorCode::NotAnExtension: return "NotAnExtension";
  case ErrorCode::GroupMismatch: return "GroupMismatch";
  case ErrorCode::InvalidSubcone: return "InvalidSubcone";
  case ErrorCode::NotRefining: return "NotRefining";
  case ErrorCode::IncompatibleSubdivision: return "IncompatibleSubdivision";
  case ErrorCode::EmptyStratification: return "EmptyStratification";
  case ErrorCode::InvalidInput: return "InvalidInput";
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::ValidationError: return "ValidationError";
  case ErrorCode::UnknownCommand: return "UnknownCommand";
  case ErrorCode::OracleMismatch: return "OracleMismatch";
  case ErrorCode::InternalError: return "InternalError";
  }
  return "InternalError";
}

} // namespace logmod
