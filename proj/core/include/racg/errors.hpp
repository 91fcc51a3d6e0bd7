#ifndef RACG_ERRORS_HPP
#define RACG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace racg {

enum class ErrorCode {
  UnknownVertex,
  SelfLoop,
  DuplicateEdge,
  ParseError,
  BadParams,
  NotTriangleFree,
  GraphTooLarge,
  DeadlineExceeded,
  InvalidEmbedding,
  NotInduced,
  PatternMismatch,
  BranchTooShort,
  NoK5,
  PlanarInput,
  SchemaVersionMismatch,
  ValidationError,
  InternalInvariantViolation,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace racg

#endif
