#pragma once

#include "landgen/landscape.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace landgen {

struct Issue {
    std::string path;  ///< JSON pointer into the instance document
    std::string message;
    friend bool operator==(const Issue&, const Issue&) = default;
};

struct RotationResidual {
    std::string path;
    double residual = 0.0;
};

/// Errors reject the instance; warnings flag values outside suggested ranges
/// or unusual structure.
struct ValidationReport {
    std::vector<Issue> errors;
    std::vector<Issue> warnings;
    std::vector<RotationResidual> rotation_residuals;

    bool ok() const noexcept { return errors.empty(); }
    bool clean() const noexcept { return errors.empty() && warnings.empty(); }
    double max_rotation_residual() const noexcept;
};

/// Rotation matrices whose residual exceeds this are rejected.
inline constexpr double kOrthogonalityTolerance = 1e-10;

ValidationReport validate(const ProblemInstance& instance);

class InvalidInstance : public std::invalid_argument {
public:
    explicit InvalidInstance(ValidationReport report);
    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

/// A batch point had the wrong length.
class BatchDimensionError : public InvalidArgument {
public:
    BatchDimensionError(std::size_t index, std::size_t found, std::size_t expected);
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

struct BatchOptions {
    unsigned threads = 0;  ///< 0 = hardware concurrency, 1 = sequential
};

/// Order-preserving; results do not depend on the thread count.
std::vector<EvalResult> batch_evaluate(const Problem& problem, std::span<const std::vector<double>> points,
                                       BatchOptions options = {});

}  // namespace landgen
