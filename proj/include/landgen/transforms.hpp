#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace landgen {

/// Regularizer used wherever a transform divides by |a| or takes log|a|.
inline constexpr double kEpsilon = 1e-12;

/// Per-coordinate parameters split by direction. Coordinate i uses `plus[i]`
/// when a_i >= 0 and `minus[i]` otherwise.
struct Directional {
    std::vector<double> plus;
    std::vector<double> minus;

    static Directional matched(std::vector<double> v) { return {v, std::move(v)}; }
    static Directional uniform(std::size_t d, double value) { return matched(std::vector<double>(d, value)); }

    std::size_t size() const noexcept { return plus.size(); }
    double select(std::size_t i, double a) const { return a >= 0.0 ? plus[i] : minus[i]; }

    friend bool operator==(const Directional&, const Directional&) = default;
};

/// a + mu a (1 - exp(-gamma |a|)) sin(omega |a|), per coordinate.
struct AdditivePeriodic {
    Directional mu;
    Directional gamma;
    Directional omega;
    friend bool operator==(const AdditivePeriodic&, const AdditivePeriodic&) = default;
};

/// Sinusoidal modulation of log|a| with two log-space frequencies.
struct LogSinusoidal {
    Directional mu;
    Directional omega1;
    Directional omega2;
    friend bool operator==(const LogSinusoidal&, const LogSinusoidal&) = default;
};

/// Gaussian-windowed carrier. Exactly one of `ell` (explicit envelope length)
/// or `eta` (extent scale, ell = eta / omega) must be set.
struct Wavelet {
    Directional mu;
    Directional omega;
    std::optional<Directional> ell;
    std::optional<double> eta;
    friend bool operator==(const Wavelet&, const Wavelet&) = default;
};

/// Odd sinusoid per coordinate gated by sin^2 of every other coordinate.
/// The stored amplitude is the dimension-free base; the applied amplitude is
/// mu0 * 2^(d-1).
struct TensorInterference {
    Directional mu0;
    Directional omega;
    friend bool operator==(const TensorInterference&, const TensorInterference&) = default;
};

/// Radial carrier r^p sin(omega r^q) applied along a / r.
struct RadialHybrid {
    double mu = 1.0;
    double p = 0.7;
    double q = 0.6;
    double omega = 10.0;
    friend bool operator==(const RadialHybrid&, const RadialHybrid&) = default;
};

using TransformSpec = std::variant<AdditivePeriodic, LogSinusoidal, Wavelet, TensorInterference, RadialHybrid>;

/// Ordered chain; element 0 is applied first (innermost).
using TransformChain = std::vector<TransformSpec>;

/// File-format tag: "additive_periodic", "log_sinusoidal", "wavelet",
/// "tensor_interference", "radial_hybrid".
std::string_view transform_tag(const TransformSpec& t);

std::vector<double> apply_additive_periodic(std::span<const double> a, const AdditivePeriodic& t);
std::vector<double> apply_log_sinusoidal(std::span<const double> a, const LogSinusoidal& t);
std::vector<double> apply_wavelet(std::span<const double> a, const Wavelet& t);
std::vector<double> apply_tensor_interference(std::span<const double> a, const TensorInterference& t);
std::vector<double> apply_radial_hybrid(std::span<const double> a, const RadialHybrid& t);

std::vector<double> apply_transform(std::span<const double> a, const TransformSpec& t);
std::vector<double> apply_chain(std::span<const double> a, const TransformChain& chain);

/// In-place chain application for the evaluation hot path. `scratch` is
/// resized as needed.
void apply_chain_inplace(std::vector<double>& a, const TransformChain& chain, std::vector<double>& scratch);

/// Throws InvalidArgument when a per-coordinate parameter vector does not
/// have length `dim`.
void check_transform_dimension(const TransformSpec& t, std::size_t dim);

}  // namespace landgen
