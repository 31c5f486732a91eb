#include "landgen/app/grid.hpp"

#include <cmath>
#include <string>

namespace landgen::app {

namespace {

const Bounds* owning_bounds(const ProblemInstance& inst, std::size_t var) {
    for (const auto& b : inst.blocks) {
        for (std::size_t i = 0; i < b.indices.size(); ++i) {
            if (b.indices[i] == var && i < b.bounds.size()) return &b.bounds[i];
        }
    }
    return nullptr;
}

GridAxis resolve_axis(const ProblemInstance& inst, GridAxis axis, const char* name) {
    if (axis.index >= inst.dimension) {
        throw InvalidArgument(std::string(name) + " axis index " + std::to_string(axis.index + 1) + " outside 1.." +
                              std::to_string(inst.dimension));
    }
    if (axis.resolution < 2 || axis.resolution > kMaxGridResolution) {
        throw InvalidArgument(std::string(name) + " resolution must lie in 2.." + std::to_string(kMaxGridResolution));
    }
    const Bounds* b = owning_bounds(inst, axis.index);
    if (!axis.min) axis.min = b ? b->lower : -100.0;
    if (!axis.max) axis.max = b ? b->upper : 100.0;
    if (!std::isfinite(*axis.min) || !std::isfinite(*axis.max) || !(*axis.min < *axis.max)) {
        throw InvalidArgument(std::string(name) + " axis needs finite min < max");
    }
    return axis;
}

GridAxis axis_from_json(const json& j, const std::string& path) {
    if (!j.is_object()) throw ParseError(path, "expected an axis object");
    GridAxis a;
    const auto& idx = j.at("index");
    if (!idx.is_number_integer() || idx.get<long long>() < 1) throw ParseError(path + "/index", "expected a 1-based index");
    a.index = static_cast<std::size_t>(idx.get<long long>() - 1);
    if (j.contains("min")) a.min = j["min"].get<double>();
    if (j.contains("max")) a.max = j["max"].get<double>();
    if (j.contains("resolution")) {
        const auto& r = j["resolution"];
        if (!r.is_number_integer() || r.get<long long>() < 0) throw ParseError(path + "/resolution", "expected an integer");
        a.resolution = static_cast<std::size_t>(r.get<long long>());
    }
    return a;
}

json axis_to_json(const GridAxis& a, const std::vector<double>& values) {
    return {{"index", a.index + 1}, {"min", *a.min}, {"max", *a.max}, {"resolution", a.resolution}, {"values", values}};
}

}  // namespace

GridRequest resolve_grid_request(const Problem& problem, const GridRequest& request) {
    const auto& inst = problem.instance();
    GridRequest r;
    r.x = resolve_axis(inst, request.x, "x");
    r.y = resolve_axis(inst, request.y, "y");
    if (r.x.index == r.y.index) throw InvalidArgument("grid axes must be distinct");
    if (request.fixed) {
        if (request.fixed->size() != inst.dimension) {
            throw InvalidArgument("fixed values have length " + std::to_string(request.fixed->size()) +
                                  ", instance dimension is " + std::to_string(inst.dimension));
        }
        r.fixed = request.fixed;
    } else {
        r.fixed = known_optimum(inst).location;
    }
    return r;
}

std::vector<double> axis_values(double min, double max, std::size_t resolution) {
    std::vector<double> v(resolution);
    const double step = (max - min) / static_cast<double>(resolution - 1);
    for (std::size_t i = 0; i < resolution; ++i) v[i] = min + static_cast<double>(i) * step;
    v.back() = max;
    return v;
}

std::vector<std::vector<double>> grid_points(const GridRequest& r) {
    const auto xs = axis_values(*r.x.min, *r.x.max, r.x.resolution);
    const auto ys = axis_values(*r.y.min, *r.y.max, r.y.resolution);
    std::vector<std::vector<double>> points;
    points.reserve(xs.size() * ys.size());
    for (double y : ys) {
        for (double x : xs) {
            auto p = *r.fixed;
            p[r.x.index] = x;
            p[r.y.index] = y;
            points.push_back(std::move(p));
        }
    }
    return points;
}

GridResult compute_grid(const Problem& problem, const GridRequest& request, BatchOptions options) {
    const GridRequest r = resolve_grid_request(problem, request);
    GridResult g;
    g.x = r.x;
    g.y = r.y;
    g.x_values = axis_values(*r.x.min, *r.x.max, r.x.resolution);
    g.y_values = axis_values(*r.y.min, *r.y.max, r.y.resolution);
    g.fixed = *r.fixed;

    std::size_t owner = 0;
    const auto& blocks = problem.instance().blocks;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        bool found = false;
        for (auto idx : blocks[j].indices) found = found || idx == r.x.index;
        if (found) {
            owner = j;
            break;
        }
    }

    const auto points = grid_points(r);
    const auto results = batch_evaluate(problem, points, options);
    g.values.reserve(results.size());
    g.active.reserve(results.size());
    for (const auto& res : results) {
        g.values.push_back(res.value);
        g.active.push_back(res.blocks[owner].active);
    }
    return g;
}

GridRequest grid_request_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("", "grid request must be an object");
    const auto& axes = j.contains("axes") ? j["axes"] : json();
    if (!axes.is_array() || axes.size() != 2) throw ParseError("/axes", "expected exactly two axis objects");
    GridRequest r;
    try {
        r.x = axis_from_json(axes[0], "/axes/0");
        r.y = axis_from_json(axes[1], "/axes/1");
        if (j.contains("fixed") && !j["fixed"].is_null()) r.fixed = j["fixed"].get<std::vector<double>>();
    } catch (const json::exception& e) {
        throw ParseError("", e.what());
    }
    return r;
}

json grid_to_json(const GridResult& g) {
    return {{"schema_version", kSchemaVersion},
            {"axes", {axis_to_json(g.x, g.x_values), axis_to_json(g.y, g.y_values)}},
            {"fixed", g.fixed},
            {"layout", "row-major; rows follow axes[1], columns follow axes[0]"},
            {"values", g.values},
            {"active", g.active}};
}

}  // namespace landgen::app
