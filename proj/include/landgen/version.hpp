#pragma once

#include <string_view>

namespace landgen {

inline constexpr std::string_view kGeneratorVersion = "1.0.0";

}  // namespace landgen
