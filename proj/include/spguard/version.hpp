#pragma once

namespace spguard {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace spguard
