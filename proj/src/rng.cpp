#include "landgen/rng.hpp"

#include <algorithm>
#include <cmath>

namespace landgen {

double RandomStream::uniform(double lo, double hi) noexcept {
    if (!(hi > lo)) return lo;
    const double v = lo + uniform01() * (hi - lo);
    return v < hi ? v : std::nextafter(hi, lo);
}

double RandomStream::uniform_left_open(double lo, double hi) noexcept {
    if (!(hi > lo)) return hi;
    const double v = hi - uniform01() * (hi - lo);
    return v > lo ? v : std::nextafter(lo, hi);
}

double RandomStream::log_uniform(double lo, double hi) noexcept {
    if (!(hi > lo)) return lo;
    const double v = std::exp(std::log(lo) + uniform01() * (std::log(hi) - std::log(lo)));
    return std::clamp(v, lo, hi);
}

std::int64_t RandomStream::integer(std::int64_t lo, std::int64_t hi) noexcept {
    if (hi <= lo) return lo;
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    // Rejection sampling keeps the draw unbiased.
    const std::uint64_t limit = span == 0 ? 0 : (~std::uint64_t{0} / span) * span;
    std::uint64_t x = next();
    while (limit != 0 && x >= limit) x = next();
    return lo + static_cast<std::int64_t>(span == 0 ? x : x % span);
}

}  // namespace landgen
