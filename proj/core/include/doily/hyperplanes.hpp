#pragma once

#include <map>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "doily/incidence.hpp"

namespace doily {

// perp:     {p} together with every point not collinear with p.
// triangle: six points containing exactly four full lines.
enum class HyperplaneClass { kPerp, kTriangle, kOther };

std::string_view class_name(HyperplaneClass c);

struct Hyperplane {
  int id = 0;
  PointSet points;
  HyperplaneClass kind = HyperplaneClass::kOther;
};

struct HyperplaneFamily {
  IncidenceStructure host;
  std::vector<Hyperplane> members;  // ascending by size, then lexicographically
  std::map<HyperplaneClass, int> class_counts;

  int size() const { return static_cast<int>(members.size()); }
  int count(HyperplaneClass c) const;
  const Hyperplane& at(int id) const { return members.at(id); }
  // Id of the member with exactly these points, or -1.
  int find(const PointSet& points) const;
};

// Proper, nonempty, and every line meets it in one or all of its points.
// Throws DomainError when the candidate's universe differs from the host.
bool is_hyperplane(const IncidenceStructure& s, const PointSet& candidate);

// Every geometric hyperplane of `s`. Hosts with at most
// kExhaustiveHyperplaneLimit points are scanned subset by subset; larger
// ones use a backtracking search that prunes on partially decided lines.
HyperplaneFamily enumerate_hyperplanes(const IncidenceStructure& s);

inline constexpr int kExhaustiveHyperplaneLimit = 20;

// Throws DomainError if `h` is not a hyperplane of `s`.
HyperplaneClass classify_hyperplane(const IncidenceStructure& s, const PointSet& h);

// For a perp hyperplane, the point p with h = {p} + non_collinear_set(p).
std::optional<int> perp_anchor(const IncidenceStructure& s, const PointSet& h);

// complement(a ^ b) in the common universe.
PointSet comp_sym_diff(const PointSet& a, const PointSet& b);

nlohmann::json family_to_json(const HyperplaneFamily& family);

}  // namespace doily
