#pragma once

namespace rabc {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kToolName = "rabc";

}  // namespace rabc
