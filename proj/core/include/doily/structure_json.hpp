#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "doily/incidence.hpp"

namespace doily {

// JSON structure format:
//   {"name": str, "points": v, "lines": [[...], ...], "labels": [str, ...]?}
// Lines are normalized on load; "labels" is optional and, when present,
// must have one entry per point. Unknown keys are ignored by the loader.
struct LabeledStructure {
  IncidenceStructure structure;
  std::vector<std::string> labels;
};

nlohmann::json structure_to_json(const IncidenceStructure& s,
                                 const std::vector<std::string>& labels = {});
LabeledStructure structure_from_json(const nlohmann::json& j);

// Canonical text rendering of a JSON document (two-space indent, trailing
// newline). All file exports go through here so output is reproducible.
std::string render_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

LabeledStructure load_structure(const std::filesystem::path& path);

}  // namespace doily
