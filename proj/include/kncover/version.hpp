#pragma once

namespace kncover {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace kncover
