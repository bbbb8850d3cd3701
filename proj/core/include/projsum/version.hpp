#pragma once

namespace projsum {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace projsum
