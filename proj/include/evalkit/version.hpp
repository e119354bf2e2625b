#pragma once

namespace evalkit {

inline constexpr const char* kToolName = "evalkit";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace evalkit
