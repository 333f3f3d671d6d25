#include "yiqmark/error.hpp"

namespace yiqmark {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MissingFile: return "missing file";
    case ErrorCode::UnsupportedFormat: return "unsupported format";
    case ErrorCode::CorruptData: return "corrupt data";
    case ErrorCode::IoFailure: return "i/o failure";
    case ErrorCode::OddDimension: return "odd dimension";
    case ErrorCode::DimensionMismatch: return "dimension mismatch";
    case ErrorCode::LengthMismatch: return "length mismatch";
    case ErrorCode::NonBinaryWatermark: return "non-binary watermark";
    case ErrorCode::NonSquare: return "non-square image";
    case ErrorCode::DegenerateSize: return "degenerate size";
    case ErrorCode::InvalidParam: return "invalid parameter";
  }
  return "unknown error";
}

}  // namespace yiqmark
