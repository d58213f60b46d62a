#pragma once

namespace amdkit {

inline constexpr const char* kVersion = "0.1.0";

} // namespace amdkit
