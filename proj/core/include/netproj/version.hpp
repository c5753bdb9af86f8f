#pragma once

namespace netproj {

inline constexpr const char* kVersion = "0.1.0";

} // namespace netproj
