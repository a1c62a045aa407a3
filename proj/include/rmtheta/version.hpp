#pragma once

namespace rmtheta {

inline constexpr const char* kVersion = "rm-theta 0.1.0";

}  // namespace rmtheta
