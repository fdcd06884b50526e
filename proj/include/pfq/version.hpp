#pragma once

namespace pfq {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pfq
