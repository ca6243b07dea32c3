#ifndef PNF_SUPPORT_ERROR_HPP
#define PNF_SUPPORT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pnf {

enum class ErrorCode {
  Parse,
  GeneratorMismatch,
  NotTotalDerivative,
  InvalidField,
  InvalidArgument,
  StabilityViolation,
  GridMismatch,
  NonPositiveSample,
  StepMismatch,
  InvalidInitialFrame,
  Overflow,
  Internal,
};

/// Single exception type for the whole core; the code maps 1:1 onto the
/// C API status values.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, std::string msg)
      : std::runtime_error(std::move(msg)), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

inline Error parse_error(std::size_t offset, const std::string& what) {
  return Error(ErrorCode::Parse,
               "syntax error at offset " + std::to_string(offset) + ": " + what);
}

}  // namespace pnf

#endif
