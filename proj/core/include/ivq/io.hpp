#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "ivq/area.hpp"
#include "ivq/engine.hpp"
#include "ivq/instance.hpp"
#include "ivq/models.hpp"
#include "ivq/rational.hpp"

namespace ivq {

using Json = nlohmann::ordered_json;

/// Malformed document or failed file access; the message names the path.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Rationals are written as "p/q" or "p" strings; integers are also accepted on input.
Json to_json(const Rational& value);
Rational rational_from_json(const Json& j);

// {"kind":"open|closed|point|mixed", ...}; a point carries "value" only and
// lo_kind/hi_kind appear only for "mixed".
Json to_json(const Area& area);
Area area_from_json(const Json& j);

Json to_json(const ModelSpec& model);
ModelSpec model_from_json(const Json& j);

Json to_json(const UncertainInstance& instance);
UncertainInstance instance_from_json(const Json& j);

/// {"responses": {"<1-based index>": [area, ...]}}, returned with 0-based keys.
std::map<std::size_t, AreaVector> script_from_json(const Json& j);
Json script_to_json(const std::map<std::size_t, AreaVector>& responses);

/// Indices are written 1-based. The answer is one index for selection and the
/// edge list for spanning trees.
Json to_json(const RunReport& report, bool mst);

Json read_json_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

}  // namespace ivq
