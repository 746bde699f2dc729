#include "doily/hyperplanes.hpp"

#include <algorithm>

namespace doily {

namespace {

bool meets_properly(std::span<const std::uint64_t> line_masks, std::uint64_t set) {
  for (std::uint64_t line : line_masks) {
    const int hit = std::popcount(line & set);
    if (hit != 1 && hit != std::popcount(line)) return false;
  }
  return true;
}

class HyperplaneSearch {
 public:
  explicit HyperplaneSearch(const IncidenceStructure& s) : s_(s) {}

  std::vector<std::uint64_t> run() {
    if (s_.num_points() > 0) descend(0, 0, 0);
    return found_;
  }

 private:
  // Decided points are [0, next); `in` holds those chosen.
  void descend(int next, std::uint64_t in, std::uint64_t decided) {
    const int v = s_.num_points();
    if (next == v) {
      if (in != 0 && in != full_mask(v)) found_.push_back(in);
      return;
    }
    const std::uint64_t bit = std::uint64_t{1} << next;
    for (bool take : {false, true}) {
      const std::uint64_t in2 = take ? (in | bit) : in;
      const std::uint64_t decided2 = decided | bit;
      if (consistent(next, in2, decided2)) descend(next + 1, in2, decided2);
    }
  }

  bool consistent(int p, std::uint64_t in, std::uint64_t decided) const {
    for (int l : s_.lines_through(p)) {
      const std::uint64_t line = s_.line_mask(l);
      const int hit = std::popcount(line & in);
      const int missed = std::popcount(line & decided & ~in);
      const int open = std::popcount(line & ~decided);
      if (hit >= 2 && missed > 0) return false;
      if (hit == 0 && open == 0) return false;
    }
    return true;
  }

  const IncidenceStructure& s_;
  std::vector<std::uint64_t> found_;
};

}  // namespace

std::string_view class_name(HyperplaneClass c) {
  switch (c) {
    case HyperplaneClass::kPerp:
      return "perp";
    case HyperplaneClass::kTriangle:
      return "triangle";
    case HyperplaneClass::kOther:
      return "other";
  }
  return "other";
}

int HyperplaneFamily::count(HyperplaneClass c) const {
  auto it = class_counts.find(c);
  return it == class_counts.end() ? 0 : it->second;
}

int HyperplaneFamily::find(const PointSet& points) const {
  for (const Hyperplane& h : members) {
    if (h.points == points) return h.id;
  }
  return -1;
}

bool is_hyperplane(const IncidenceStructure& s, const PointSet& candidate) {
  if (candidate.universe() != s.num_points()) {
    throw DomainError("is_hyperplane: candidate universe " + std::to_string(candidate.universe()) +
                      " differs from host point count " + std::to_string(s.num_points()));
  }
  if (candidate.empty() || candidate.is_full()) return false;
  return meets_properly(s.line_masks(), candidate.bits());
}

HyperplaneFamily enumerate_hyperplanes(const IncidenceStructure& s) {
  const int v = s.num_points();
  if (v > kMaxPoints) throw CapacityError("enumerate_hyperplanes: more than 64 points");

  std::vector<std::uint64_t> masks;
  if (v <= kExhaustiveHyperplaneLimit) {
    const std::uint64_t full = full_mask(v);
    for (std::uint64_t m = 1; m < full; ++m) {
      if (meets_properly(s.line_masks(), m)) masks.push_back(m);
    }
  } else {
    masks = HyperplaneSearch(s).run();
  }

  HyperplaneFamily family{s, {}, {}};
  family.members.reserve(masks.size());
  for (std::uint64_t m : masks) family.members.push_back({0, PointSet(v, m), HyperplaneClass::kOther});
  std::sort(family.members.begin(), family.members.end(),
            [](const Hyperplane& a, const Hyperplane& b) {
              if (a.points.size() != b.points.size()) return a.points.size() < b.points.size();
              return PointSet::lex_less(a.points, b.points);
            });
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    Hyperplane& h = family.members[i];
    h.id = static_cast<int>(i);
    h.kind = classify_hyperplane(s, h.points);
    ++family.class_counts[h.kind];
  }
  return family;
}

std::optional<int> perp_anchor(const IncidenceStructure& s, const PointSet& h) {
  for (int p : h.members()) {
    if (non_collinear_set(s, p).with(p) == h) return p;
  }
  return std::nullopt;
}

HyperplaneClass classify_hyperplane(const IncidenceStructure& s, const PointSet& h) {
  if (!is_hyperplane(s, h)) {
    throw DomainError("classify_hyperplane: " + h.to_string() + " is not a hyperplane");
  }
  if (perp_anchor(s, h)) return HyperplaneClass::kPerp;
  if (h.size() == 6) {
    int inside = 0;
    for (std::uint64_t line : s.line_masks()) {
      if ((line & ~h.bits()) == 0) ++inside;
    }
    if (inside == 4) return HyperplaneClass::kTriangle;
  }
  return HyperplaneClass::kOther;
}

PointSet comp_sym_diff(const PointSet& a, const PointSet& b) { return (a ^ b).complement(); }

nlohmann::json family_to_json(const HyperplaneFamily& family) {
  nlohmann::json out = nlohmann::json::array();
  for (const Hyperplane& h : family.members) {
    out.push_back({{"id", h.id},
                   {"size", h.points.size()},
                   {"class", class_name(h.kind)},
                   {"points", h.points.members()}});
  }
  return out;
}

}  // namespace doily
