#pragma once

#include <array>
#include <vector>

#include <nlohmann/json.hpp>

#include "doily/catalog.hpp"
#include "doily/hyperplanes.hpp"
#include "doily/structure_json.hpp"
#include "doily/symmetry.hpp"

namespace doily {

using Triple = std::array<int, 3>;

// Bookkeeping from the scan over all triples of distinct hyperplanes.
struct TripleScan {
  std::vector<Triple> xor_closed;     // triple symmetric difference = all points
  std::vector<Triple> accepted;       // xor-closed and sharing a non-collinear pair
  std::vector<Triple> rejected;       // xor-closed, no shared non-collinear pair
  int exactly_one_pair = 0;           // accepted triples sharing exactly one such pair
};

// Geometry whose points are the hyperplanes of the host (in family order)
// and whose lines are the accepted triples.
struct DerivedGeometry {
  IncidenceStructure structure;
  std::vector<int> correspondence;  // derived point -> hyperplane id
  HyperplaneFamily family;
  TripleScan scan;
};

struct IsomorphismWitness {
  Permutation point_map;  // derived point -> reference point
  Permutation line_map;   // derived line -> reference line
};

// The three point sets have symmetric difference equal to the whole host;
// equivalently each is complement(symmetric difference of the other two).
bool xor_closed(const Hyperplane& h1, const Hyperplane& h2, const Hyperplane& h3);

// The common intersection contains two points not collinear in `host`.
bool shares_noncollinear_pair(const IncidenceStructure& host, const Hyperplane& h1,
                              const Hyperplane& h2, const Hyperplane& h3);

// Number of non-collinear pairs inside the common intersection.
int shared_noncollinear_pairs(const IncidenceStructure& host, const Hyperplane& h1,
                              const Hyperplane& h2, const Hyperplane& h3);

inline constexpr int kDesarguesHyperplaneCount = 15;

// Throws ConstructionError unless the host has exactly 15 hyperplanes.
DerivedGeometry build_derived(const CatalogEntry& host);
DerivedGeometry build_derived(const HyperplaneFamily& family);

// Checks a candidate point map and returns the full witness if it is a
// flag-preserving bijection.
std::optional<IsomorphismWitness> check_witness(const DerivedGeometry& d,
                                                const CatalogEntry& reference,
                                                std::span<const int> point_map);

// Throws CertificationError if no isomorphism exists.
IsomorphismWitness certify_isomorphism(const DerivedGeometry& d, const CatalogEntry& reference);

// `points` (derived point indices) are pairwise non-collinear in the
// derived geometry and meet every derived line exactly once.
bool is_derived_ovoid(const DerivedGeometry& d, const PointSet& points);

// The triangle-class hyperplanes form an ovoid of the derived geometry.
bool ovoid_image_check(const DerivedGeometry& d);

PointSet hyperplanes_of_class(const DerivedGeometry& d, HyperplaneClass kind);

nlohmann::json derived_to_json(const DerivedGeometry& d);
nlohmann::json witness_to_json(const IsomorphismWitness& w);

}  // namespace doily
