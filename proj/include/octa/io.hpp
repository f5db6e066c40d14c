#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "octa/decompose.hpp"
#include "octa/geometry.hpp"
#include "octa/octahedral.hpp"
#include "octa/span_search.hpp"

namespace octa::io {

using nlohmann::json;

// Octahedral-system document: {"n", "class_sizes", "edges"}; edges are
// 1-based component tuples, serialized in sorted canonical order.
json system_to_json(const OctahedralSystem& os);
OctahedralSystem system_from_json(const json& doc, const std::string& where = "");

// Configuration document: {"d", "colours"}; coordinates are "p/q" strings
// ("p" for integers) and round-trip bit-exactly.
json configuration_to_json(const ColourfulConfiguration& config);
ColourfulConfiguration configuration_from_json(const json& doc, const std::string& where = "");

json umbrella_to_json(const Umbrella& u);
Umbrella umbrella_from_json(const json& doc, const std::string& where = "");

json suitable_decomposition_to_json(const SuitableDecomposition& sd);
json minimum_report_to_json(const MinimumReport& report);

json depth_report_to_json(const DepthReport& report, bool include_system);

// Parses a whole document, wrapping parse errors into input_error with
// the source name.
json parse_document(const std::string& text, const std::string& where);
json load_document(const std::string& path);
void save_document(const json& doc, const std::string& path);

std::string read_file(const std::string& path);

// FNV-1a 64-bit content hash, 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace octa::io
