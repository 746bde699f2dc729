#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "doily/incidence.hpp"

namespace doily {

struct GQReport {
  std::optional<int> s_param;  // points per line - 1, when uniform
  std::optional<int> t_param;  // lines per point - 1, when regular
  bool axiom_holds = false;
  bool triangle_free = false;
  std::int64_t triangle_count = 0;
  std::vector<PointSet> ovoids;  // filled when the axiom holds
};

// Unordered point triples that are pairwise collinear but do not lie on a
// common line. Throws DomainError for a non-linear structure.
std::int64_t count_triangles(const IncidenceStructure& s);

// Point-line form of the GQ axiom: for every point p off a line L exactly one
// point of L is collinear with p. Requires a linear structure with uniform
// line size and point degree; otherwise the report says the axiom fails.
GQReport gq_axiom_holds(const IncidenceStructure& s);

// Point sets meeting every line exactly once. Throws DomainError unless the
// GQ axiom holds for `s`.
std::vector<PointSet> find_ovoids(const IncidenceStructure& s);

bool is_ovoid(const IncidenceStructure& s, const PointSet& points);

nlohmann::json gq_report_to_json(const GQReport& report);

}  // namespace doily
