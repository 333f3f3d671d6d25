#pragma once

namespace yiqmark {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace yiqmark
