#pragma once

namespace gmec {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gmec
