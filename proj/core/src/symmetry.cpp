#include "doily/symmetry.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace doily {

namespace {

void check_budget(const IncidenceStructure& s, const char* what) {
  if (s.num_points() > kSymmetryPointLimit) {
    throw CapacityError(std::string(what) + ": " + std::to_string(s.num_points()) +
                        " points exceeds the search limit of " +
                        std::to_string(kSymmetryPointLimit));
  }
}

std::uint64_t image_mask(std::uint64_t mask, std::span<const int> map) {
  std::uint64_t out = 0;
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
    out |= std::uint64_t{1} << map[std::countr_zero(rest)];
  }
  return out;
}

// Colour refinement over the disjoint union of both Levi graphs, so colours
// are comparable between the two structures. Returns point colours of each.
std::pair<std::vector<int>, std::vector<int>> refine_point_colours(const IncidenceStructure& a,
                                                                   const IncidenceStructure& b) {
  struct Side {
    const IncidenceStructure* s;
    std::vector<int> point_colour;
    std::vector<int> line_colour;
  };
  std::array<Side, 2> sides{Side{&a, {}, {}}, Side{&b, {}, {}}};
  for (Side& side : sides) {
    side.point_colour.assign(side.s->num_points(), 0);
    side.line_colour.assign(side.s->num_lines(), 1);
  }

  std::size_t classes = 2;
  for (;;) {
    std::map<std::vector<int>, int> palette;
    std::array<std::vector<std::vector<int>>, 2> point_sig;
    std::array<std::vector<std::vector<int>>, 2> line_sig;
    for (int i = 0; i < 2; ++i) {
      const Side& side = sides[i];
      for (int p = 0; p < side.s->num_points(); ++p) {
        std::vector<int> sig{0, side.point_colour[p]};
        std::vector<int> around;
        for (int l : side.s->lines_through(p)) around.push_back(side.line_colour[l]);
        std::sort(around.begin(), around.end());
        sig.insert(sig.end(), around.begin(), around.end());
        palette.emplace(sig, 0);
        point_sig[i].push_back(std::move(sig));
      }
      for (int l = 0; l < side.s->num_lines(); ++l) {
        std::vector<int> sig{1, side.line_colour[l]};
        std::vector<int> around;
        for (int p : side.s->line(l)) around.push_back(side.point_colour[p]);
        std::sort(around.begin(), around.end());
        sig.insert(sig.end(), around.begin(), around.end());
        palette.emplace(sig, 0);
        line_sig[i].push_back(std::move(sig));
      }
    }
    int next = 0;
    for (auto& [sig, colour] : palette) colour = next++;
    for (int i = 0; i < 2; ++i) {
      for (std::size_t p = 0; p < point_sig[i].size(); ++p) {
        sides[i].point_colour[p] = palette[point_sig[i][p]];
      }
      for (std::size_t l = 0; l < line_sig[i].size(); ++l) {
        sides[i].line_colour[l] = palette[line_sig[i][l]];
      }
    }
    if (palette.size() == classes) break;
    classes = palette.size();
  }
  return {sides[0].point_colour, sides[1].point_colour};
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const IncidenceStructure& a, const IncidenceStructure& b,
                    const std::function<bool(const Permutation&)>& visit)
      : a_(a), b_(b), visit_(visit) {}

  void run() {
    const int v = a_.num_points();
    if (v != b_.num_points() || a_.num_lines() != b_.num_lines()) return;
    if (sorted_line_sizes(a_) != sorted_line_sizes(b_)) return;

    std::tie(colour_a_, colour_b_) = refine_point_colours(a_, b_);
    std::vector<int> ca = colour_a_, cb = colour_b_;
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return;

    order_ = assignment_order();
    map_.assign(v, -1);
    used_.assign(v, false);
    descend(0);
  }

 private:
  static std::vector<int> sorted_line_sizes(const IncidenceStructure& s) {
    std::vector<int> sizes;
    for (const Line& l : s.lines()) sizes.push_back(static_cast<int>(l.size()));
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  }

  // Greedy order: prefer points collinear with many already-ordered points,
  // then points in small colour classes.
  std::vector<int> assignment_order() const {
    const int v = a_.num_points();
    std::map<int, int> sizes;
    for (int c : colour_a_) ++sizes[c];
    std::vector<int> order;
    std::uint64_t placed = 0;
    for (int step = 0; step < v; ++step) {
      int best = -1;
      std::tuple<int, int, int> best_key{};
      for (int p = 0; p < v; ++p) {
        if ((placed >> p) & 1u) continue;
        const int links = std::popcount(a_.neighbour_mask(p) & placed);
        std::tuple<int, int, int> key{-links, sizes[colour_a_[p]], p};
        if (best < 0 || key < best_key) {
          best = p;
          best_key = key;
        }
      }
      order.push_back(best);
      placed |= std::uint64_t{1} << best;
    }
    return order;
  }

  // Lines through x (in a) and through y (in b), described by size and the
  // trace on already-mapped points, must agree as multisets.
  bool consistent(int x, int y) const {
    std::vector<std::pair<int, std::uint64_t>> from_a, from_b;
    for (int l : a_.lines_through(x)) {
      const std::uint64_t trace = a_.line_mask(l) & mapped_a_;
      from_a.emplace_back(std::popcount(a_.line_mask(l)), image_mask(trace, map_));
    }
    for (int l : b_.lines_through(y)) {
      from_b.emplace_back(std::popcount(b_.line_mask(l)), b_.line_mask(l) & mapped_b_);
    }
    if (from_a.size() != from_b.size()) return false;
    std::sort(from_a.begin(), from_a.end());
    std::sort(from_b.begin(), from_b.end());
    return from_a == from_b;
  }

  bool descend(std::size_t depth) {
    if (depth == order_.size()) {
      if (!induced_line_map(a_, b_, map_)) return true;
      return visit_(map_);
    }
    const int x = order_[depth];
    const std::uint64_t xbit = std::uint64_t{1} << x;
    for (int y = 0; y < b_.num_points(); ++y) {
      if (used_[y] || colour_a_[x] != colour_b_[y]) continue;
      const std::uint64_t ybit = std::uint64_t{1} << y;
      map_[x] = y;
      used_[y] = true;
      mapped_a_ |= xbit;
      mapped_b_ |= ybit;
      const bool ok = consistent(x, y);
      bool keep_going = true;
      if (ok) keep_going = descend(depth + 1);
      mapped_a_ &= ~xbit;
      mapped_b_ &= ~ybit;
      used_[y] = false;
      map_[x] = -1;
      if (!keep_going) return false;
    }
    return true;
  }

  const IncidenceStructure& a_;
  const IncidenceStructure& b_;
  const std::function<bool(const Permutation&)>& visit_;
  std::vector<int> colour_a_, colour_b_;
  std::vector<int> order_;
  Permutation map_;
  std::vector<bool> used_;
  std::uint64_t mapped_a_ = 0;
  std::uint64_t mapped_b_ = 0;
};

// Branch-and-bound over label assignments. Labels are handed out in
// increasing order; after label k is placed, every line whose points are all
// labelled has a relabelled mask below 2^(k+1), and all later lines lie above
// it, so partial lists can be compared against the incumbent.
class ColexSearch {
 public:
  ColexSearch(int v, std::span<const std::uint64_t> masks)
      : v_(v), masks_(masks.begin(), masks.end()), point_lines_(v) {
    for (std::size_t l = 0; l < masks_.size(); ++l) {
      for (std::uint64_t rest = masks_[l]; rest != 0; rest &= rest - 1) {
        point_lines_[std::countr_zero(rest)].push_back(static_cast<int>(l));
      }
    }
    label_of_.assign(v_, -1);
    partial_.reserve(masks_.size());
  }

  ColexLabeling minimize() {
    test_mode_ = false;
    descend(0);
    return {best_, best_labels_};
  }

  // True iff some relabeling beats `target` (ascending masks of the input).
  bool beaten_by_relabeling(std::span<const std::uint64_t> target) {
    test_mode_ = true;
    best_.assign(target.begin(), target.end());
    have_best_ = true;
    descend(0);
    return found_smaller_;
  }

 private:
  int compare_to_best(std::uint64_t bound) const {
    for (std::size_t j = 0; j < partial_.size(); ++j) {
      if (partial_[j] < best_[j]) return -1;
      if (partial_[j] > best_[j]) return 1;
    }
    if (partial_.size() < best_.size() && best_[partial_.size()] < bound) return 1;
    return 0;
  }

  void finish_leaf(int next_label) {
    if (test_mode_) return;  // equal to target: an automorphism
    std::vector<int> labels = label_of_;
    int label = next_label;
    for (int p = 0; p < v_; ++p) {
      if (labels[p] < 0) labels[p] = label++;
    }
    best_ = partial_;
    best_labels_ = std::move(labels);
    have_best_ = true;
  }

  // Returns false once the search should stop.
  bool descend(int label) {
    if (partial_.size() == masks_.size()) {
      if (!have_best_ || compare_to_best(~std::uint64_t{0}) < 0 || test_mode_) {
        finish_leaf(label);
      }
      return true;
    }
    bool tried_isolated = false;
    for (int x = 0; x < v_; ++x) {
      if (label_of_[x] >= 0) continue;
      if (point_lines_[x].empty()) {
        if (tried_isolated) continue;
        tried_isolated = true;
      }
      label_of_[x] = label;
      const std::size_t before = partial_.size();
      for (int l : point_lines_[x]) {
        std::uint64_t relabeled = 0;
        bool complete = true;
        for (std::uint64_t rest = masks_[l]; rest != 0; rest &= rest - 1) {
          const int q = label_of_[std::countr_zero(rest)];
          if (q < 0) {
            complete = false;
            break;
          }
          relabeled |= std::uint64_t{1} << q;
        }
        if (complete) partial_.push_back(relabeled);
      }
      std::sort(partial_.begin() + static_cast<std::ptrdiff_t>(before), partial_.end());

      int cmp = 0;
      if (have_best_) cmp = compare_to_best(label + 1 >= 64 ? ~std::uint64_t{0}
                                                            : std::uint64_t{1} << (label + 1));
      bool keep_going = true;
      if (test_mode_ && cmp < 0) {
        found_smaller_ = true;
        keep_going = false;
      } else if (cmp <= 0) {
        keep_going = descend(label + 1);
      }
      partial_.resize(before);
      label_of_[x] = -1;
      if (!keep_going) return false;
    }
    return true;
  }

  int v_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::vector<int>> point_lines_;
  std::vector<int> label_of_;
  std::vector<std::uint64_t> partial_;
  std::vector<std::uint64_t> best_;
  Permutation best_labels_;
  bool have_best_ = false;
  bool test_mode_ = false;
  bool found_smaller_ = false;
};

}  // namespace

std::string CanonicalForm::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

std::optional<Permutation> induced_line_map(const IncidenceStructure& a,
                                            const IncidenceStructure& b,
                                            std::span<const int> point_map) {
  const int v = a.num_points();
  if (b.num_points() != v || static_cast<int>(point_map.size()) != v ||
      a.num_lines() != b.num_lines()) {
    return std::nullopt;
  }
  std::vector<bool> hit(v, false);
  for (int p : point_map) {
    if (p < 0 || p >= v || hit[p]) return std::nullopt;
    hit[p] = true;
  }
  std::map<std::uint64_t, int> b_index;
  for (int l = 0; l < b.num_lines(); ++l) b_index.emplace(b.line_mask(l), l);
  Permutation line_map(a.num_lines());
  std::vector<bool> line_hit(b.num_lines(), false);
  for (int l = 0; l < a.num_lines(); ++l) {
    auto it = b_index.find(image_mask(a.line_mask(l), point_map));
    if (it == b_index.end() || line_hit[it->second]) return std::nullopt;
    line_hit[it->second] = true;
    line_map[l] = it->second;
  }
  return line_map;
}

bool verify_flag_bijection(const IncidenceStructure& a, const IncidenceStructure& b,
                           std::span<const int> point_map, std::span<const int> line_map) {
  if (static_cast<int>(point_map.size()) != a.num_points() ||
      static_cast<int>(line_map.size()) != a.num_lines() ||
      a.num_points() != b.num_points() || a.num_lines() != b.num_lines()) {
    return false;
  }
  std::set<std::pair<int, int>> images;
  for (const Flag& f : flags(a)) {
    const int p = point_map[f.point];
    const int l = line_map[f.line];
    if (p < 0 || p >= b.num_points() || l < 0 || l >= b.num_lines()) return false;
    if (((b.line_mask(l) >> p) & 1u) == 0) return false;
    images.emplace(p, l);
  }
  // Injective on flags and onto: every flag of b is hit.
  return static_cast<int>(images.size()) == b.flag_count() && a.flag_count() == b.flag_count();
}

void for_each_isomorphism(const IncidenceStructure& a, const IncidenceStructure& b,
                          const std::function<bool(const Permutation&)>& visit) {
  check_budget(a, "isomorphism search");
  check_budget(b, "isomorphism search");
  IsomorphismSearch(a, b, visit).run();
}

std::optional<Permutation> find_isomorphism(const IncidenceStructure& a,
                                            const IncidenceStructure& b) {
  if (a.num_points() != b.num_points() || a.num_lines() != b.num_lines()) return std::nullopt;
  std::optional<Permutation> found;
  for_each_isomorphism(a, b, [&](const Permutation& map) {
    found = map;
    return false;
  });
  if (found) {
    auto lines = induced_line_map(a, b, *found);
    if (!lines || !verify_flag_bijection(a, b, *found, *lines)) return std::nullopt;
  }
  return found;
}

Permutation compose(std::span<const int> outer, std::span<const int> inner) {
  Permutation out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

Permutation inverse(std::span<const int> perm) {
  Permutation out(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out[perm[i]] = static_cast<int>(i);
  return out;
}

AutomorphismGroup automorphism_group(const IncidenceStructure& s) {
  AutomorphismGroup group;
  for_each_isomorphism(s, s, [&](const Permutation& map) {
    auto lines = induced_line_map(s, s, map);
    group.elements.push_back({map, *lines});
    return true;
  });
  Permutation identity(s.num_points());
  std::iota(identity.begin(), identity.end(), 0);
  auto id_it = std::find_if(group.elements.begin(), group.elements.end(),
                            [&](const Automorphism& g) { return g.point_perm == identity; });
  if (id_it != group.elements.end()) std::iter_swap(group.elements.begin(), id_it);

  // Flag orbits by union-find over the generators (here: all elements).
  const auto all_flags = flags(s);
  std::map<std::pair<int, int>, int> flag_index;
  for (std::size_t i = 0; i < all_flags.size(); ++i) {
    flag_index.emplace(std::pair{all_flags[i].point, all_flags[i].line}, static_cast<int>(i));
  }
  std::vector<int> parent(all_flags.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (const Automorphism& g : group.elements) {
    for (std::size_t i = 0; i < all_flags.size(); ++i) {
      const int j = flag_index.at({g.point_perm[all_flags[i].point], g.line_perm[all_flags[i].line]});
      parent[root(static_cast<int>(i))] = root(j);
    }
  }
  std::map<int, std::vector<int>> orbits;
  for (std::size_t i = 0; i < all_flags.size(); ++i) {
    orbits[root(static_cast<int>(i))].push_back(static_cast<int>(i));
  }
  for (auto& [r, members] : orbits) group.flag_orbits.push_back(std::move(members));
  std::sort(group.flag_orbits.begin(), group.flag_orbits.end());
  group.flag_orbit_count = static_cast<int>(group.flag_orbits.size());
  return group;
}

bool is_flag_transitive(const IncidenceStructure& s) {
  return automorphism_group(s).flag_orbit_count == 1;
}

ColexLabeling colex_minimal_labeling(int num_points, std::span<const std::uint64_t> line_masks) {
  if (num_points > kSymmetryPointLimit) {
    throw CapacityError("canonical labeling: " + std::to_string(num_points) +
                        " points exceeds the search limit of " +
                        std::to_string(kSymmetryPointLimit));
  }
  return ColexSearch(num_points, line_masks).minimize();
}

bool is_colex_minimal(int num_points, std::span<const std::uint64_t> sorted_masks) {
  return !ColexSearch(num_points, sorted_masks).beaten_by_relabeling(sorted_masks);
}

CanonicalForm canonical_form(const IncidenceStructure& s) {
  check_budget(s, "canonical_form");
  const ColexLabeling labeling = colex_minimal_labeling(s.num_points(), s.line_masks());
  CanonicalForm form;
  form.bytes.push_back(static_cast<std::uint8_t>(s.num_points()));
  form.bytes.push_back(static_cast<std::uint8_t>(s.num_lines()));
  for (std::uint64_t mask : labeling.masks) {
    form.bytes.push_back(static_cast<std::uint8_t>(std::popcount(mask)));
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      form.bytes.push_back(static_cast<std::uint8_t>(std::countr_zero(rest)));
    }
  }
  return form;
}

IncidenceStructure canonical_structure(const IncidenceStructure& s) {
  check_budget(s, "canonical_structure");
  const ColexLabeling labeling = colex_minimal_labeling(s.num_points(), s.line_masks());
  return s.relabeled(labeling.label_of);
}

nlohmann::json group_to_json(const AutomorphismGroup& group) {
  nlohmann::json elements = nlohmann::json::array();
  for (const Automorphism& g : group.elements) {
    elements.push_back({{"points", g.point_perm}, {"lines", g.line_perm}});
  }
  return {{"order", group.order()},
          {"flag_orbit_count", group.flag_orbit_count},
          {"elements", elements}};
}

}  // namespace doily
