#pragma once

#include <stdexcept>
#include <string>

namespace yiqmark {

enum class ErrorCode {
  MissingFile,
  UnsupportedFormat,
  CorruptData,
  IoFailure,
  OddDimension,
  DimensionMismatch,
  LengthMismatch,
  NonBinaryWatermark,
  NonSquare,
  DegenerateSize,
  InvalidParam,
};

const char* to_string(ErrorCode code) noexcept;

// The single exception type thrown by the core library. The C API maps the
// code one-to-one onto ym_status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace yiqmark
