#pragma once

namespace filtralab {

inline constexpr const char* kToolName = "filtralab";
inline constexpr const char* kVersion = "0.1.0";

} // namespace filtralab
