#pragma once

#include "landgen/component.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace landgen {

inline constexpr int kSchemaVersion = 1;

struct Bounds {
    double lower = -100.0;
    double upper = 100.0;
    friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// A group of variables carrying its own multi-component landscape.
/// `indices` are 0-based global variable indices; component coordinates are
/// block-local (position in `indices`).
struct BlockSpec {
    std::vector<std::size_t> indices;
    double weight = 1.0;
    std::vector<Bounds> bounds;
    std::vector<ComponentSpec> components;

    std::size_t dim() const noexcept { return indices.size(); }
    friend bool operator==(const BlockSpec&, const BlockSpec&) = default;
};

/// Where an instance came from. Absent for hand-written instances.
struct Provenance {
    std::uint64_t seed = 0;
    std::string generator_version;
    std::string prng;
    std::string strata_digest;
    std::optional<std::string> family_of;  ///< global digest of the family base
    std::optional<std::uint64_t> member;
    friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct ProblemInstance {
    int schema_version = kSchemaVersion;
    std::size_t dimension = 0;
    Sense sense = Sense::Minimize;
    std::vector<BlockSpec> blocks;
    bool overlap_allowed = false;
    std::optional<Provenance> provenance;
    friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;
};

/// Single-block, unit-weight instance over [-100,100]^d wrapping `components`.
ProblemInstance single_block_instance(std::vector<ComponentSpec> components, Sense sense = Sense::Minimize,
                                      Bounds bounds = {});

/// Block with its components neutralized.
struct PreparedBlock {
    std::vector<std::size_t> indices;
    double weight = 1.0;
    std::vector<NeutralizedComponent> components;

    std::size_t dim() const noexcept { return indices.size(); }
};

struct LandscapeValue {
    double value = 0.0;
    std::size_t active = 0;  ///< component achieving the min (max); lowest index on ties
};

/// Lower envelope (upper envelope under Maximize) of the block's components.
LandscapeValue eval_landscape(std::span<const double> x_local, const PreparedBlock& block, Sense sense);

struct BlockEvaluation {
    std::size_t block = 0;
    double value = 0.0;
    std::size_t active = 0;
    friend bool operator==(const BlockEvaluation&, const BlockEvaluation&) = default;
};

struct EvalResult {
    double value = 0.0;
    std::vector<BlockEvaluation> blocks;
    friend bool operator==(const EvalResult&, const EvalResult&) = default;
};

/// Validated, neutralized instance ready for evaluation. Immutable.
class Problem {
public:
    /// Validates first; throws InvalidInstance when the report has errors.
    explicit Problem(ProblemInstance instance);

    const ProblemInstance& instance() const noexcept { return instance_; }
    const std::vector<PreparedBlock>& blocks() const noexcept { return blocks_; }
    std::size_t dimension() const noexcept { return instance_.dimension; }
    Sense sense() const noexcept { return instance_.sense; }

    /// Weighted sum of block landscapes. Bounds are not enforced.
    EvalResult evaluate(std::span<const double> x) const;
    double value(std::span<const double> x) const { return evaluate(x).value; }

private:
    ProblemInstance instance_;
    std::vector<PreparedBlock> blocks_;
};

inline EvalResult eval_composite(std::span<const double> x, const Problem& problem) { return problem.evaluate(x); }

enum class Exactness { Exact, LowerBound };

struct KnownOptimum {
    std::vector<double> location;
    double value = 0.0;
    Exactness exactness = Exactness::Exact;
    /// Per block, every component whose offset attains the block optimum.
    std::vector<std::vector<std::size_t>> co_optimal;
};

/// Optimum implied by the component offsets. With overlapping blocks the
/// first block (in order) owning a shared coordinate places it, and the
/// value is reported as a lower bound if the blocks disagree there.
KnownOptimum known_optimum(const ProblemInstance& instance);

std::string_view to_string(Sense s);
std::string_view to_string(Exactness e);

}  // namespace landgen
