#pragma once

#include "landgen/landscape.hpp"
#include "landgen/parameters.hpp"
#include "landgen/serialize.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace landgen {

struct IntRange {
    std::int64_t lo = 1;
    std::int64_t hi = 1;
    friend bool operator==(const IntRange&, const IntRange&) = default;
};

enum class SymmetryPolicy {
    Matched,      ///< minus-direction parameters copy the plus-direction draw
    Independent,  ///< each direction drawn separately
};

enum class WaveletExtent { Eta, Explicit };

/// One of the radial-hybrid (q, omega) presets.
struct RadialPreset {
    std::string name;
    Interval q;
    Interval omega;
};

struct ChainPolicy {
    IntRange length{0, 3};
    /// Relative selection weight per operator tag; zero disables an operator.
    std::map<std::string, double> operator_weights{{"additive_periodic", 1.0},
                                                   {"log_sinusoidal", 1.0},
                                                   {"wavelet", 1.0},
                                                   {"tensor_interference", 1.0},
                                                   {"radial_hybrid", 1.0}};
    WaveletExtent wavelet_extent = WaveletExtent::Eta;
    /// Sampling ranges keyed like parameter_table(), e.g. "wavelet.mu".
    std::map<std::string, Interval> ranges;
    std::vector<RadialPreset> radial_presets;
};

/// Sampling ranges and structural choices for random_instance. Defaults
/// follow the suggested ranges of the parameter table.
struct GenerationStrata {
    IntRange blocks{1, 1};
    IntRange block_dim{2, 4};
    IntRange components{1, 5};
    Bounds bounds{-100.0, 100.0};
    Interval weight{1.0, 1.0, false, false};
    double form1_probability = 0.5;
    Interval exponent{0.2, 1.2, true, false};
    Interval kappa{1.0, 1000.0, false, false};  ///< sampled log-uniformly
    Interval delta{1.0, 1000.0, false, false};
    Interval r_ref{0.0, 100.0, true, false};
    Interval offset_base{-1000.0, 0.0, false, false};
    Interval offset_gap{0.0, 100.0, false, false};
    SymmetryPolicy symmetry = SymmetryPolicy::Independent;
    double angle_fraction = 0.5;  ///< probability that a given (u, v) angle is nonzero
    Interval angle{-3.141592653589793, 3.141592653589793, false, true};
    ChainPolicy chain;
    Sense sense = Sense::Minimize;
    bool shuffle_indices = false;

    GenerationStrata();
};

/// Throws InvalidArgument describing the first violated constraint.
void check_strata(const GenerationStrata& strata);

json strata_to_json(const GenerationStrata& strata);
/// Missing keys keep their defaults. Throws ParseError on malformed input.
GenerationStrata strata_from_json(const json& j);
GenerationStrata load_strata(const std::string& path);

/// 16 hex digits of FNV-1a over the canonical strata document.
std::string strata_digest(const GenerationStrata& strata);

/// Deterministic in (seed, strata, generator version).
ProblemInstance random_instance(std::uint64_t seed, const GenerationStrata& strata);

struct FamilyOptions {
    bool centers = true;
    bool offsets = true;
    bool angles = true;
    Interval offset_base{-1000.0, 0.0, false, false};
};

/// Instances sharing every shape parameter of `base` while re-drawing the
/// placement quantities enabled in `options`. Offsets move by one shared
/// shift, so offset differences are kept.
std::vector<ProblemInstance> instance_family(std::uint64_t seed, const ProblemInstance& base, std::size_t count,
                                             const FamilyOptions& options = {});

/// Digest of everything except centers, offsets, angle values and
/// provenance. The angle sparsity pattern is included.
std::string global_characteristics_digest(const ProblemInstance& instance);

}  // namespace landgen
