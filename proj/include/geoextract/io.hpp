#pragma once

#include "geoextract/extraction.hpp"
#include "geoextract/geometry.hpp"

#include "json.hpp"

#include <string>

// Instance and coloring documents. Coordinates and weights are JSON
// integers or "p/q" strings; nothing is ever stored as floating point.
namespace geoextract::io {

using Json = nlohmann::json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const Instance& instance);
// Unknown fields, missing required fields and malformed numbers throw
// Error{Parse}; geometric validation follows make_instance.
Instance instance_from_json(const Json& j);

Json to_json(const Coloring& coloring);
Coloring coloring_from_json(const Json& j);

Json to_json(const extraction::ExtractionResult& result);

// FNV-1a 64 over the canonical document (metadata excluded), as 16 hex
// digits. Equal geometry, weights and targets give equal digests.
std::string instance_digest(const Instance& instance);

std::string read_text(const std::string& path);
Json read_json(const std::string& path);
Instance read_instance(const std::string& path);
Coloring read_coloring(const std::string& path);

// Writes to a sibling temporary and renames, so a failed run leaves no
// partial file behind.
void write_text_atomic(const std::string& path, const std::string& content);

}  // namespace geoextract::io
