#include "doily/structure_json.hpp"

#include <fstream>
#include <sstream>

namespace doily {

nlohmann::json structure_to_json(const IncidenceStructure& s,
                                 const std::vector<std::string>& labels) {
  nlohmann::json j;
  j["name"] = s.name();
  j["points"] = s.num_points();
  j["lines"] = s.lines();
  if (!labels.empty()) j["labels"] = labels;
  return j;
}

LabeledStructure structure_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("structure JSON must be an object");
  if (!j.contains("points") || !j["points"].is_number_integer()) {
    throw ValidationError("structure JSON needs an integer \"points\" field");
  }
  if (!j.contains("lines") || !j["lines"].is_array()) {
    throw ValidationError("structure JSON needs a \"lines\" array");
  }
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ValidationError("\"name\" must be a string");
    name = j["name"].get<std::string>();
  }
  const auto points = j["points"].get<long long>();
  if (points < 0) throw ValidationError("\"points\" must be non-negative");
  if (points > kMaxPoints) {
    throw CapacityError("structure has " + std::to_string(points) + " points; the limit is " +
                        std::to_string(kMaxPoints));
  }

  std::vector<Line> lines;
  const auto& raw_lines = j["lines"];
  for (std::size_t i = 0; i < raw_lines.size(); ++i) {
    const auto& raw = raw_lines[i];
    if (!raw.is_array()) {
      throw ValidationError("line " + std::to_string(i) + " is not an array");
    }
    Line line;
    for (const auto& entry : raw) {
      if (!entry.is_number_integer()) {
        throw ValidationError("line " + std::to_string(i) + " has a non-integer entry");
      }
      const auto p = entry.get<long long>();
      if (p < 0 || p >= points) {
        throw ValidationError("line " + std::to_string(i) + " has point " + std::to_string(p) +
                              " outside [0, " + std::to_string(points) + ")");
      }
      line.push_back(static_cast<int>(p));
    }
    lines.push_back(std::move(line));
  }

  LabeledStructure out{IncidenceStructure(name, static_cast<int>(points), std::move(lines)), {}};
  if (j.contains("labels")) {
    const auto& labels = j["labels"];
    if (!labels.is_array() || static_cast<long long>(labels.size()) != points) {
      throw ValidationError("\"labels\" must be an array with one entry per point");
    }
    for (const auto& label : labels) {
      if (!label.is_string()) throw ValidationError("labels must be strings");
      out.labels.push_back(label.get<std::string>());
    }
  }
  return out;
}

std::string render_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << text;
}

LabeledStructure load_structure(const std::filesystem::path& path) {
  return structure_from_json(read_json_file(path));
}

}  // namespace doily
