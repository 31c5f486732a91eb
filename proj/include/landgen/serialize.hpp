#pragma once

#include "landgen/landscape.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace landgen {

using json = nlohmann::json;

/// Unchecked conversion to the instance document. Variable and angle
/// indices are written 1-based.
json to_json(const ProblemInstance& instance);

/// Parses an instance document. Throws ParseError (with a JSON pointer) on
/// malformed content and SchemaVersionError on a newer schema. The result is
/// not validated.
ProblemInstance instance_from_json(const json& doc);

/// Canonical text: sorted keys, two-space indent, shortest round-trip
/// floats, trailing newline. Throws InvalidInstance if validation fails.
std::string serialize(const ProblemInstance& instance);

/// Parses text. Throws ParseError with a byte offset for syntax errors.
ProblemInstance deserialize(std::string_view text);

ProblemInstance load_instance(const std::string& path);
void save_instance(const ProblemInstance& instance, const std::string& path);

json transform_to_json(const TransformSpec& t);
TransformSpec transform_from_json(const json& j, const std::string& path = "");

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

}  // namespace landgen
