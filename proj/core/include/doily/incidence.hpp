#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "doily/point_set.hpp"

namespace doily {

using Line = std::vector<int>;

// A finite point-line incidence structure on points {0, ..., v-1}.
//
// Lines are normalized on construction: members sorted ascending, lines
// sorted lexicographically. Duplicate lines, repeated points within a line,
// empty lines and out-of-range indices are rejected with ValidationError.
// Instances are immutable.
class IncidenceStructure {
 public:
  IncidenceStructure() = default;
  IncidenceStructure(std::string name, int num_points, std::vector<Line> lines);

  const std::string& name() const { return name_; }
  int num_points() const { return num_points_; }
  int num_lines() const { return static_cast<int>(lines_.size()); }

  const std::vector<Line>& lines() const { return lines_; }
  const Line& line(int index) const { return lines_.at(index); }
  std::uint64_t line_mask(int index) const { return line_masks_[index]; }
  std::span<const std::uint64_t> line_masks() const { return line_masks_; }
  PointSet line_points(int index) const { return PointSet(num_points_, line_masks_.at(index)); }
  PointSet all_points() const { return PointSet::full(num_points_); }

  // Indices of the lines through `p`, ascending.
  const std::vector<int>& lines_through(int p) const { return point_lines_.at(p); }
  int degree(int p) const { return static_cast<int>(point_lines_.at(p).size()); }

  // Points sharing at least one line with `p`, excluding `p` itself.
  std::uint64_t neighbour_mask(int p) const { return neighbours_.at(p); }

  int flag_count() const;

  // Image of the structure under the point map p -> perm[p].
  IncidenceStructure relabeled(std::span<const int> perm, std::string name = {}) const;
  IncidenceStructure renamed(std::string name) const;

  // Structural equality: same point count and same normalized line list.
  friend bool operator==(const IncidenceStructure& a, const IncidenceStructure& b) {
    return a.num_points_ == b.num_points_ && a.lines_ == b.lines_;
  }

 private:
  std::string name_;
  int num_points_ = 0;
  std::vector<Line> lines_;
  std::vector<std::uint64_t> line_masks_;
  std::vector<std::vector<int>> point_lines_;
  std::vector<std::uint64_t> neighbours_;
};

struct Flag {
  int point = 0;
  int line = 0;
  friend bool operator==(const Flag&, const Flag&) = default;
};

std::vector<Flag> flags(const IncidenceStructure& s);

struct ConfigurationCheck {
  bool points_per_line_uniform = false;
  int line_size = 0;  // meaningful when points_per_line_uniform
  bool is_k_regular = false;
  int point_degree = 0;  // meaningful when is_k_regular
  bool linear = false;
  int flags = 0;

  // v_k configuration: k points per line, k lines per point, linear.
  bool is_configuration(int k) const {
    return points_per_line_uniform && is_k_regular && line_size == k && point_degree == k &&
           linear;
  }
};

ConfigurationCheck validate_configuration(const IncidenceStructure& s);

// True iff a line contains both p and q. Throws DomainError if p == q or
// either index is out of range.
bool collinear(const IncidenceStructure& s, int p, int q);

// All q != p not collinear with p.
PointSet non_collinear_set(const IncidenceStructure& s, int p);

// Index of the line equal to `points`, if any.
std::optional<int> find_line(const IncidenceStructure& s, const PointSet& points);

// Bipartite point/line graph. Vertices 0..v-1 are points, v..v+b-1 lines.
struct LeviGraph {
  int num_points = 0;
  int num_lines = 0;
  std::vector<std::vector<int>> adjacency;

  int vertex_count() const { return num_points + num_lines; }
  int edge_count() const;
  bool is_point_vertex(int vertex) const { return vertex < num_points; }
  // Length of a shortest cycle, or nullopt for a forest.
  std::optional<int> girth() const;
};

LeviGraph levi_graph(const IncidenceStructure& s);

// Points of the dual are the lines of `s`; dual line j is the set of lines
// through original point j. Throws ValidationError on an isolated point.
IncidenceStructure dual(const IncidenceStructure& s);

}  // namespace doily
