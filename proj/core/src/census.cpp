#include "doily/census.hpp"

#include <numeric>

#include "doily/structure_json.hpp"

namespace doily {

namespace {

class OrderlyGenerator {
 public:
  explicit OrderlyGenerator(int v) : v_(v), degree_(v, 0), collinear_(v, 0) {
    for (int c = 2; c < v; ++c) {
      for (int b = 1; b < c; ++b) {
        for (int a = 0; a < b; ++a) {
          triples_.push_back((std::uint64_t{1} << a) | (std::uint64_t{1} << b) |
                             (std::uint64_t{1} << c));
        }
      }
    }
    // Ascending numeric order of masks is colex order of triples.
    std::sort(triples_.begin(), triples_.end());
  }

  std::vector<std::vector<std::uint64_t>> run() {
    extend(0, 0);
    return found_;
  }

 private:
  // `first` is the index of the first triple allowed next; `used` is the
  // number of points touched so far (always a prefix {0..used-1}).
  void extend(std::size_t first, int used) {
    if (static_cast<int>(lines_.size()) == v_) {
      if (used == v_) found_.push_back(lines_);
      return;
    }
    if (!feasible()) return;
    for (std::size_t t = first; t < triples_.size(); ++t) {
      const std::uint64_t triple = triples_[t];
      // Canonical structures use a prefix of the labels, so a new line may
      // only bring in the next unused labels in order.
      const int top = 63 - std::countl_zero(triple);
      if (top >= used + 3) break;
      const std::uint64_t fresh = triple & ~full_mask(used);
      if (fresh != 0 && fresh != (full_mask(used + std::popcount(fresh)) & ~full_mask(used))) {
        continue;
      }
      if (!admissible(triple)) continue;

      lines_.push_back(triple);
      if (is_colex_minimal(v_, lines_)) {
        apply(triple, +1);
        extend(t + 1, std::max(used, top + 1));
        apply(triple, -1);
      }
      lines_.pop_back();
    }
  }

  bool admissible(std::uint64_t triple) const {
    for (std::uint64_t rest = triple; rest != 0; rest &= rest - 1) {
      const int p = std::countr_zero(rest);
      if (degree_[p] >= 3) return false;
      if ((collinear_[p] & triple) != 0) return false;
    }
    return true;
  }

  // Each point short of degree 3 needs two fresh partners per missing line.
  bool feasible() const {
    std::uint64_t open = 0;
    for (int p = 0; p < v_; ++p) {
      if (degree_[p] < 3) open |= std::uint64_t{1} << p;
    }
    for (int p = 0; p < v_; ++p) {
      const int deficit = 3 - degree_[p];
      if (deficit == 0) continue;
      const std::uint64_t partners = open & ~collinear_[p] & ~(std::uint64_t{1} << p);
      if (std::popcount(partners) < 2 * deficit) return false;
    }
    return true;
  }

  void apply(std::uint64_t triple, int sign) {
    for (std::uint64_t rest = triple; rest != 0; rest &= rest - 1) {
      const int p = std::countr_zero(rest);
      degree_[p] += sign;
      if (sign > 0) {
        collinear_[p] |= triple & ~(std::uint64_t{1} << p);
      } else {
        collinear_[p] &= ~(triple & ~(std::uint64_t{1} << p));
      }
    }
  }

  int v_;
  std::vector<std::uint64_t> triples_;
  std::vector<std::uint64_t> lines_;
  std::vector<int> degree_;
  std::vector<std::uint64_t> collinear_;
  std::vector<std::vector<std::uint64_t>> found_;
};

}  // namespace

CensusResult enumerate_v3(int v, CensusOptions options) {
  const int limit = options.long_run ? kSymmetryPointLimit : kCensusDefaultMaxPoints;
  if (v < kCensusMinPoints || v > limit) {
    std::string message = "enumerate_v3: v = " + std::to_string(v) + " is outside the budget [" +
                          std::to_string(kCensusMinPoints) + ", " + std::to_string(limit) + "]";
    if (!options.long_run && v > kCensusDefaultMaxPoints && v <= kSymmetryPointLimit) {
      message += "; pass the long-run flag to attempt it";
    }
    throw CapacityError(message);
  }

  CensusResult result;
  result.v = v;
  int index = 0;
  for (const auto& masks : OrderlyGenerator(v).run()) {
    std::vector<Line> lines;
    for (std::uint64_t mask : masks) lines.push_back(PointSet(v, mask).members());
    IncidenceStructure s("v3-" + std::to_string(v) + "-" + std::to_string(++index), v,
                         std::move(lines));
    CanonicalForm form = canonical_form(s);
    result.members.push_back({std::move(s), std::move(form)});
  }
  result.total = static_cast<int>(result.members.size());
  return result;
}

bool noncollinear_sets_are_lines(const IncidenceStructure& s) {
  for (int p = 0; p < s.num_points(); ++p) {
    if (!find_line(s, non_collinear_set(s, p))) return false;
  }
  return true;
}

bool is_connected(const IncidenceStructure& s) {
  if (s.num_points() == 0) return true;
  std::uint64_t reached = 1;
  for (std::uint64_t frontier = 1; frontier != 0;) {
    std::uint64_t next = 0;
    for (std::uint64_t rest = frontier; rest != 0; rest &= rest - 1) {
      next |= s.neighbour_mask(std::countr_zero(rest));
    }
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == full_mask(s.num_points());
}

MemberProperties member_properties(const IncidenceStructure& s) {
  return {is_flag_transitive(s), noncollinear_sets_are_lines(s), is_connected(s)};
}

CensusSummary census_properties(const CensusResult& census) {
  CensusSummary summary;
  for (std::size_t i = 0; i < census.members.size(); ++i) {
    MemberProperties props = member_properties(census.members[i].structure);
    if (props.flag_transitive) summary.flag_transitive.push_back(static_cast<int>(i));
    if (props.noncollinear_triples_are_lines) {
      summary.noncollinear_line.push_back(static_cast<int>(i));
    }
    if (props.connected) ++summary.connected;
    summary.per_member.push_back(props);
  }
  return summary;
}

nlohmann::json census_to_json(const CensusResult& census, const CensusSummary& summary) {
  nlohmann::json members = nlohmann::json::array();
  for (std::size_t i = 0; i < census.members.size(); ++i) {
    nlohmann::json entry = structure_to_json(census.members[i].structure);
    entry["canonical_form"] = census.members[i].form.hex();
    if (i < summary.per_member.size()) {
      const MemberProperties& p = summary.per_member[i];
      entry["flag_transitive"] = p.flag_transitive;
      entry["noncollinear_triples_are_lines"] = p.noncollinear_triples_are_lines;
      entry["connected"] = p.connected;
    }
    members.push_back(std::move(entry));
  }
  return members;
}

}  // namespace doily
