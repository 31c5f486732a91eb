#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace landgen {

/// Interval with independently open or closed ends. Infinite ends are allowed.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool lo_open = false;
    bool hi_open = false;

    bool contains(double v) const noexcept {
        const bool above = lo_open ? v > lo : v >= lo;
        const bool below = hi_open ? v < hi : v <= hi;
        return above && below;
    }

    std::string to_string() const;
};

/// One row of the parameter reference: suggested range and default.
struct ParameterInfo {
    std::string_view key;         ///< e.g. "component.exponent", "wavelet.eta"
    std::string_view description;
    Interval suggested;
    std::optional<double> default_value;
};

/// Rows in display order.
std::span<const ParameterInfo> parameter_table();

/// Throws std::out_of_range for unknown keys.
const ParameterInfo& parameter_info(std::string_view key);

/// Suggested number of components per block.
inline constexpr std::size_t kMaxSuggestedComponents = 25;

}  // namespace landgen
