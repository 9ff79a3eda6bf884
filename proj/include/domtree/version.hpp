#pragma once

namespace domtree {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace domtree
