#pragma once

namespace burnscan {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace burnscan
