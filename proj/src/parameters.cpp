#include "landgen/parameters.hpp"

#include <array>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace landgen {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

constexpr Interval closed(double lo, double hi) { return {lo, hi, false, false}; }
constexpr Interval left_open(double lo, double hi) { return {lo, hi, true, false}; }
constexpr Interval right_open(double lo, double hi) { return {lo, hi, false, true}; }

const std::array<ParameterInfo, 26> kTable{{
    {"component.exponent", "basin curvature factor (both forms)", left_open(0.2, 1.2), 0.6},
    {"component.kappa", "anisotropy factor", {0.0, kInf, true, true}, 100.0},
    {"component.angle", "rotation angle (radians)", right_open(-kPi, kPi), 0.0},
    {"component.delta", "target rise at the reference radius", {1.0, kInf, false, true}, 100.0},
    {"component.r_ref", "reference radius for neutralization", left_open(0.0, 100.0), 100.0},
    {"landscape.components", "components per block", closed(1.0, 25.0), std::nullopt},
    {"block.count", "number of blocks", {1.0, kInf, false, true}, 1.0},
    {"block.dim", "local block dimension", {2.0, kInf, false, true}, std::nullopt},
    {"block.weight", "block weight", {0.0, kInf, true, true}, 1.0},
    {"block.bounds", "block domain bounds", closed(-100.0, 100.0), std::nullopt},
    {"additive_periodic.mu", "ripple strength", closed(0.1, 0.7), 0.4},
    {"additive_periodic.gamma", "saturating envelope rate", closed(0.002, 0.2), 0.05},
    {"additive_periodic.omega", "oscillation frequency", closed(0.05, 1.0), 1.0},
    {"log_sinusoidal.mu", "modulation strength", closed(0.05, 0.5), 0.25},
    {"log_sinusoidal.omega1", "primary log-space frequency", closed(5.0, 50.0), 50.0},
    {"log_sinusoidal.omega2", "secondary log-space frequency", closed(5.0, 50.0), 50.0},
    {"wavelet.mu", "peak amplitude", closed(10.0, 50.0), 50.0},
    {"wavelet.omega", "carrier frequency", closed(0.3, 1.0), 0.3},
    {"wavelet.ell", "explicit spatial extent", closed(10.0, 80.0), 80.0},
    {"wavelet.eta", "extent scale (ell = eta / omega)", closed(10.0, 24.0), 10.0},
    {"tensor_interference.mu0", "base coupling strength (scaled by 2^(d-1))", closed(10.0, 20.0), 10.0},
    {"tensor_interference.omega", "interference pattern spacing", closed(0.1, 0.7), 0.7},
    {"radial_hybrid.mu", "isotropic modulation amplitude", closed(0.4, 2.0), 1.0},
    {"radial_hybrid.p", "radial envelope growth", closed(0.4, 0.7), 0.7},
    // Union of the near-uniform (q 0.9-1.2, omega 0.1-0.4) and widening
    // (q 0.4-0.6, omega 5-10) presets.
    {"radial_hybrid.q", "ring spacing control", closed(0.4, 1.2), 0.6},
    {"radial_hybrid.omega", "ring density factor", closed(0.1, 10.0), 10.0},
}};

}  // namespace

std::string Interval::to_string() const {
    std::ostringstream os;
    os << (lo_open ? '(' : '[') << lo << ", " << hi << (hi_open ? ')' : ']');
    return os.str();
}

std::span<const ParameterInfo> parameter_table() { return kTable; }

const ParameterInfo& parameter_info(std::string_view key) {
    for (const auto& row : kTable) {
        if (row.key == key) return row;
    }
    throw std::out_of_range("unknown parameter key: " + std::string(key));
}

}  // namespace landgen
