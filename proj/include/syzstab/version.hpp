#pragma once

namespace syzstab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace syzstab
