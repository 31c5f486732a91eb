#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace landgen {

/// Precondition or shape violation on an API argument.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Identifies a component inside a problem: block position and component
/// position within that block (both 0-based).
struct ComponentId {
    std::size_t block = 0;
    std::size_t component = 0;

    friend bool operator==(const ComponentId&, const ComponentId&) = default;
};

/// Raised when a component evaluates to a non-finite value, typically from
/// extreme exponents or coordinates far outside the domain.
class EvaluationOverflow : public std::runtime_error {
public:
    explicit EvaluationOverflow(ComponentId id)
        : std::runtime_error("component evaluation overflow (block " + std::to_string(id.block) +
                             ", component " + std::to_string(id.component) + ")"),
          id_(id) {}

    ComponentId component() const noexcept { return id_; }

private:
    ComponentId id_;
};

/// Malformed instance or strata document. `where` is a JSON pointer or a
/// byte offset rendered as text.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string where, const std::string& what)
        : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

/// Document declares a schema version this build cannot read.
class SchemaVersionError : public ParseError {
public:
    SchemaVersionError(int found, int supported)
        : ParseError("/schema_version", "unsupported schema_version " + std::to_string(found) +
                                            " (this build reads up to " + std::to_string(supported) + ")"),
          found_(found) {}

    int found() const noexcept { return found_; }

private:
    int found_;
};

}  // namespace landgen
