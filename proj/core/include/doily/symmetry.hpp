#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "doily/incidence.hpp"

namespace doily {

using Permutation = std::vector<int>;

// Searches refuse structures with more points than this.
inline constexpr int kSymmetryPointLimit = 20;

struct Automorphism {
  Permutation point_perm;
  Permutation line_perm;  // induced by point_perm
  friend bool operator==(const Automorphism&, const Automorphism&) = default;
};

struct AutomorphismGroup {
  std::vector<Automorphism> elements;  // identity first
  std::vector<std::vector<int>> flag_orbits;  // indices into flags(s)
  int flag_orbit_count = 0;

  int order() const { return static_cast<int>(elements.size()); }
};

// Total-order key; equal keys iff the structures are isomorphic.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;

  std::string hex() const;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// Line permutation induced by a point bijection from `a` onto `b`, if the
// bijection maps the lines of `a` exactly onto the lines of `b`.
std::optional<Permutation> induced_line_map(const IncidenceStructure& a,
                                            const IncidenceStructure& b,
                                            std::span<const int> point_map);

// Flag-by-flag check that (point_map, line_map) sends every flag of `a` to a
// flag of `b` and every flag of `b` comes from one of `a`.
bool verify_flag_bijection(const IncidenceStructure& a, const IncidenceStructure& b,
                           std::span<const int> point_map, std::span<const int> line_map);

// Enumerates point bijections a -> b that induce line bijections. The
// visitor returns false to stop. Throws CapacityError past the point limit.
void for_each_isomorphism(const IncidenceStructure& a, const IncidenceStructure& b,
                          const std::function<bool(const Permutation&)>& visit);

std::optional<Permutation> find_isomorphism(const IncidenceStructure& a,
                                            const IncidenceStructure& b);

AutomorphismGroup automorphism_group(const IncidenceStructure& s);
bool is_flag_transitive(const IncidenceStructure& s);

Permutation compose(std::span<const int> outer, std::span<const int> inner);
Permutation inverse(std::span<const int> perm);

// Colex-minimal relabeling. Lines are point bitmasks; the canonical
// representative is the lexicographically smallest ascending list of
// relabeled line masks over all point permutations.
struct ColexLabeling {
  std::vector<std::uint64_t> masks;  // ascending
  Permutation label_of;              // original point -> new label
};

ColexLabeling colex_minimal_labeling(int num_points, std::span<const std::uint64_t> line_masks);

// True iff the ascending mask list is already colex-minimal.
bool is_colex_minimal(int num_points, std::span<const std::uint64_t> sorted_masks);

CanonicalForm canonical_form(const IncidenceStructure& s);

// The relabeled copy of `s` whose lines are the canonical masks.
IncidenceStructure canonical_structure(const IncidenceStructure& s);

nlohmann::json group_to_json(const AutomorphismGroup& group);

}  // namespace doily
