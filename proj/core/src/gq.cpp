#include "doily/gq.hpp"

namespace doily {

namespace {

std::int64_t triangles_by_definition(const IncidenceStructure& s) {
  const int v = s.num_points();
  std::int64_t count = 0;
  for (int a = 0; a < v; ++a) {
    for (int b = a + 1; b < v; ++b) {
      if (((s.neighbour_mask(a) >> b) & 1u) == 0) continue;
      // Third points collinear with both, beyond b.
      std::uint64_t common = s.neighbour_mask(a) & s.neighbour_mask(b) & ~full_mask(b + 1);
      for (; common != 0; common &= common - 1) {
        const int c = std::countr_zero(common);
        const std::uint64_t triple =
            (std::uint64_t{1} << a) | (std::uint64_t{1} << b) | (std::uint64_t{1} << c);
        bool on_one_line = false;
        for (int l : s.lines_through(a)) {
          if ((s.line_mask(l) & triple) == triple) {
            on_one_line = true;
            break;
          }
        }
        if (!on_one_line) ++count;
      }
    }
  }
  return count;
}

bool axiom_by_definition(const IncidenceStructure& s) {
  for (int l = 0; l < s.num_lines(); ++l) {
    const std::uint64_t line = s.line_mask(l);
    for (int p = 0; p < s.num_points(); ++p) {
      if ((line >> p) & 1u) continue;
      if (std::popcount(s.neighbour_mask(p) & line) != 1) return false;
    }
  }
  return true;
}

void collect_ovoids(const IncidenceStructure& s, int next, int remaining, std::uint64_t chosen,
                    std::uint64_t covered_lines, std::vector<PointSet>& out) {
  if (remaining == 0) {
    if (covered_lines == full_mask(s.num_lines())) out.emplace_back(s.num_points(), chosen);
    return;
  }
  for (int p = next; p <= s.num_points() - remaining; ++p) {
    std::uint64_t through = 0;
    for (int l : s.lines_through(p)) through |= std::uint64_t{1} << l;
    if ((through & covered_lines) != 0) continue;
    collect_ovoids(s, p + 1, remaining - 1, chosen | (std::uint64_t{1} << p),
                   covered_lines | through, out);
  }
}

}  // namespace

std::int64_t count_triangles(const IncidenceStructure& s) {
  if (!validate_configuration(s).linear) {
    throw DomainError("count_triangles: structure is not linear");
  }
  return triangles_by_definition(s);
}

GQReport gq_axiom_holds(const IncidenceStructure& s) {
  const ConfigurationCheck check = validate_configuration(s);
  GQReport report;
  if (check.points_per_line_uniform && s.num_lines() > 0) report.s_param = check.line_size - 1;
  if (check.is_k_regular && s.num_points() > 0) report.t_param = check.point_degree - 1;
  report.triangle_count = triangles_by_definition(s);
  report.triangle_free = report.triangle_count == 0;
  report.axiom_holds = check.linear && report.s_param && report.t_param && axiom_by_definition(s);
  if (report.axiom_holds) report.ovoids = find_ovoids(s);
  return report;
}

std::vector<PointSet> find_ovoids(const IncidenceStructure& s) {
  const ConfigurationCheck check = validate_configuration(s);
  if (!check.linear || !check.points_per_line_uniform || !check.is_k_regular ||
      s.num_lines() == 0 || !axiom_by_definition(s)) {
    throw DomainError("find_ovoids: structure is not a generalized quadrangle");
  }
  if (s.num_lines() > 64) throw CapacityError("find_ovoids: more than 64 lines");
  std::vector<PointSet> out;
  // Each ovoid point covers the t+1 lines through it.
  if (s.num_lines() % check.point_degree != 0) return out;
  collect_ovoids(s, 0, s.num_lines() / check.point_degree, 0, 0, out);
  return out;
}

bool is_ovoid(const IncidenceStructure& s, const PointSet& points) {
  if (points.universe() != s.num_points()) return false;
  for (std::uint64_t line : s.line_masks()) {
    if (std::popcount(line & points.bits()) != 1) return false;
  }
  return true;
}

nlohmann::json gq_report_to_json(const GQReport& report) {
  nlohmann::json ovoids = nlohmann::json::array();
  for (const PointSet& o : report.ovoids) ovoids.push_back(o.members());
  nlohmann::json j{{"axiom_holds", report.axiom_holds},
                   {"triangle_free", report.triangle_free},
                   {"triangle_count", report.triangle_count},
                   {"ovoids", ovoids}};
  j["s"] = report.s_param ? nlohmann::json(*report.s_param) : nlohmann::json(nullptr);
  j["t"] = report.t_param ? nlohmann::json(*report.t_param) : nlohmann::json(nullptr);
  return j;
}

}  // namespace doily
