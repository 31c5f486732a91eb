#pragma once

#include "landgen/instance.hpp"
#include "landgen/serialize.hpp"

#include <optional>
#include <vector>

namespace landgen::app {

inline constexpr std::size_t kMaxGridResolution = 2048;

/// One plotted axis. `index` is a 0-based global variable index; min/max
/// default to the bounds of the first block owning the variable.
struct GridAxis {
    std::size_t index = 0;
    std::optional<double> min;
    std::optional<double> max;
    std::size_t resolution = 101;
};

/// 2-D slice through an instance. Unplotted variables take `fixed` values,
/// defaulting to the known-optimum location.
struct GridRequest {
    GridAxis x;
    GridAxis y;
    std::optional<std::vector<double>> fixed;
};

struct GridResult {
    GridAxis x;  ///< with min/max resolved
    GridAxis y;
    std::vector<double> x_values;
    std::vector<double> y_values;
    std::vector<double> fixed;
    /// Row-major: values[row * x.resolution + col], row over y, col over x.
    std::vector<double> values;
    /// Active component of the block owning the x axis, per cell.
    std::vector<std::size_t> active;
};

/// Throws InvalidArgument on bad axes, resolution or fixed-vector length.
GridRequest resolve_grid_request(const Problem& problem, const GridRequest& request);

/// Evenly spaced values with exact end points.
std::vector<double> axis_values(double min, double max, std::size_t resolution);

/// Points in row-major order for a resolved request.
std::vector<std::vector<double>> grid_points(const GridRequest& resolved);

GridResult compute_grid(const Problem& problem, const GridRequest& request, BatchOptions options = {});

/// JSON form uses 1-based indices: {"axes": [{index, min, max, resolution}, ...], "fixed": [...]}.
GridRequest grid_request_from_json(const json& j);
json grid_to_json(const GridResult& grid);

}  // namespace landgen::app
