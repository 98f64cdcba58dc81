#pragma once

namespace volterra {

inline constexpr const char* kLibraryVersion = "0.1.0";

} // namespace volterra
