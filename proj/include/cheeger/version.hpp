#pragma once

namespace cheeger {

inline constexpr const char* kToolName = "cheeger";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace cheeger
