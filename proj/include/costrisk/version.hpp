#pragma once

#include <string_view>

namespace costrisk {

inline constexpr std::string_view kToolkitVersion = "0.1.0";

}  // namespace costrisk
