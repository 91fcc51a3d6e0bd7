#include "racg/errors.hpp"

namespace racg {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::NotTriangleFree: return "NotTriangleFree";
    case ErrorCode::GraphTooLarge: return "GraphTooLarge";
    case ErrorCode::DeadlineExceeded: return "DeadlineExceeded";
    case ErrorCode::InvalidEmbedding: return "InvalidEmbedding";
    case ErrorCode::NotInduced: return "NotInduced";
    case ErrorCode::PatternMismatch: return "PatternMismatch";
    case ErrorCode::BranchTooShort: return "BranchTooShort";
    case ErrorCode::NoK5: return "NoK5";
    case ErrorCode::PlanarInput: return "PlanarInput";
    case ErrorCode::SchemaVersionMismatch: return "SchemaVersionMismatch";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
  }
  return "UnknownError";
}

}  // namespace racg
