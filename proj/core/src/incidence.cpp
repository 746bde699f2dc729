#include "doily/incidence.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace doily {

namespace {

std::string line_text(const Line& line) {
  std::string out = "[";
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(line[i]);
  }
  return out + "]";
}

}  // namespace

IncidenceStructure::IncidenceStructure(std::string name, int num_points, std::vector<Line> lines)
    : name_(std::move(name)), num_points_(num_points), lines_(std::move(lines)) {
  if (num_points_ < 0) throw ValidationError("negative point count");
  if (num_points_ > kMaxPoints) {
    throw CapacityError("structure has " + std::to_string(num_points_) +
                        " points; the limit is " + std::to_string(kMaxPoints));
  }
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    Line& line = lines_[i];
    if (line.empty()) throw ValidationError("line " + std::to_string(i) + " is empty");
    for (int p : line) {
      if (p < 0 || p >= num_points_) {
        throw ValidationError("line " + std::to_string(i) + " " + line_text(line) +
                              " has point " + std::to_string(p) + " outside [0, " +
                              std::to_string(num_points_) + ")");
      }
    }
    std::sort(line.begin(), line.end());
    if (std::adjacent_find(line.begin(), line.end()) != line.end()) {
      throw ValidationError("line " + std::to_string(i) + " " + line_text(line) +
                            " repeats a point");
    }
  }
  std::sort(lines_.begin(), lines_.end());
  if (auto dup = std::adjacent_find(lines_.begin(), lines_.end()); dup != lines_.end()) {
    throw ValidationError("duplicate line " + line_text(*dup));
  }

  line_masks_.reserve(lines_.size());
  point_lines_.assign(num_points_, {});
  neighbours_.assign(num_points_, 0);
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    std::uint64_t mask = 0;
    for (int p : lines_[i]) mask |= std::uint64_t{1} << p;
    line_masks_.push_back(mask);
    for (int p : lines_[i]) {
      point_lines_[p].push_back(static_cast<int>(i));
      neighbours_[p] |= mask & ~(std::uint64_t{1} << p);
    }
  }
}

int IncidenceStructure::flag_count() const {
  int total = 0;
  for (const Line& line : lines_) total += static_cast<int>(line.size());
  return total;
}

IncidenceStructure IncidenceStructure::relabeled(std::span<const int> perm,
                                                 std::string name) const {
  if (static_cast<int>(perm.size()) != num_points_) {
    throw DomainError("relabeling has " + std::to_string(perm.size()) + " entries, expected " +
                      std::to_string(num_points_));
  }
  std::vector<Line> mapped;
  mapped.reserve(lines_.size());
  for (const Line& line : lines_) {
    Line image;
    image.reserve(line.size());
    for (int p : line) image.push_back(perm[p]);
    mapped.push_back(std::move(image));
  }
  return IncidenceStructure(name.empty() ? name_ : std::move(name), num_points_,
                            std::move(mapped));
}

IncidenceStructure IncidenceStructure::renamed(std::string name) const {
  IncidenceStructure copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

std::vector<Flag> flags(const IncidenceStructure& s) {
  std::vector<Flag> out;
  out.reserve(s.flag_count());
  for (int l = 0; l < s.num_lines(); ++l) {
    for (int p : s.line(l)) out.push_back({p, l});
  }
  return out;
}

ConfigurationCheck validate_configuration(const IncidenceStructure& s) {
  ConfigurationCheck check;
  check.flags = s.flag_count();

  check.points_per_line_uniform = true;
  check.line_size = s.num_lines() > 0 ? static_cast<int>(s.line(0).size()) : 0;
  for (const Line& line : s.lines()) {
    if (static_cast<int>(line.size()) != check.line_size) check.points_per_line_uniform = false;
  }

  check.is_k_regular = true;
  check.point_degree = s.num_points() > 0 ? s.degree(0) : 0;
  for (int p = 0; p < s.num_points(); ++p) {
    if (s.degree(p) != check.point_degree) check.is_k_regular = false;
  }

  // Linear iff no two lines share two or more points.
  check.linear = true;
  for (int a = 0; a < s.num_lines() && check.linear; ++a) {
    for (int b = a + 1; b < s.num_lines(); ++b) {
      if (std::popcount(s.line_mask(a) & s.line_mask(b)) >= 2) {
        check.linear = false;
        break;
      }
    }
  }
  return check;
}

bool collinear(const IncidenceStructure& s, int p, int q) {
  const int v = s.num_points();
  if (p < 0 || p >= v || q < 0 || q >= v) {
    throw DomainError("collinear: point index out of range");
  }
  if (p == q) throw DomainError("collinear: requires two distinct points");
  return ((s.neighbour_mask(p) >> q) & 1u) != 0;
}

PointSet non_collinear_set(const IncidenceStructure& s, int p) {
  if (p < 0 || p >= s.num_points()) throw DomainError("non_collinear_set: point out of range");
  const std::uint64_t self = std::uint64_t{1} << p;
  return PointSet(s.num_points(),
                  full_mask(s.num_points()) & ~s.neighbour_mask(p) & ~self);
}

std::optional<int> find_line(const IncidenceStructure& s, const PointSet& points) {
  if (points.universe() != s.num_points()) return std::nullopt;
  for (int l = 0; l < s.num_lines(); ++l) {
    if (s.line_mask(l) == points.bits()) return l;
  }
  return std::nullopt;
}

int LeviGraph::edge_count() const {
  int total = 0;
  for (int p = 0; p < num_points; ++p) total += static_cast<int>(adjacency[p].size());
  return total;
}

std::optional<int> LeviGraph::girth() const {
  const int n = vertex_count();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n);
  std::vector<int> parent(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : adjacency[u]) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

LeviGraph levi_graph(const IncidenceStructure& s) {
  LeviGraph graph;
  graph.num_points = s.num_points();
  graph.num_lines = s.num_lines();
  graph.adjacency.assign(graph.vertex_count(), {});
  for (int l = 0; l < s.num_lines(); ++l) {
    for (int p : s.line(l)) {
      graph.adjacency[p].push_back(graph.num_points + l);
      graph.adjacency[graph.num_points + l].push_back(p);
    }
  }
  return graph;
}

IncidenceStructure dual(const IncidenceStructure& s) {
  std::vector<Line> lines;
  lines.reserve(s.num_points());
  for (int p = 0; p < s.num_points(); ++p) {
    if (s.degree(p) == 0) {
      throw ValidationError("dual: point " + std::to_string(p) + " lies on no line");
    }
    lines.push_back(s.lines_through(p));
  }
  return IncidenceStructure("dual(" + s.name() + ")", s.num_lines(), std::move(lines));
}

}  // namespace doily
