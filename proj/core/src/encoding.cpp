#include "doily/encoding.hpp"

namespace doily {

namespace {

void require_same_host(const Hyperplane& h1, const Hyperplane& h2, const Hyperplane& h3) {
  if (h1.points.universe() != h2.points.universe() ||
      h1.points.universe() != h3.points.universe()) {
    throw DomainError("hyperplanes belong to different hosts");
  }
}

}  // namespace

bool xor_closed(const Hyperplane& h1, const Hyperplane& h2, const Hyperplane& h3) {
  require_same_host(h1, h2, h3);
  return (h1.points ^ h2.points ^ h3.points).is_full();
}

int shared_noncollinear_pairs(const IncidenceStructure& host, const Hyperplane& h1,
                              const Hyperplane& h2, const Hyperplane& h3) {
  require_same_host(h1, h2, h3);
  if (h1.points.universe() != host.num_points()) {
    throw DomainError("hyperplanes do not belong to this host");
  }
  const auto common = (h1.points & h2.points & h3.points).members();
  int pairs = 0;
  for (std::size_t i = 0; i < common.size(); ++i) {
    for (std::size_t j = i + 1; j < common.size(); ++j) {
      if (!collinear(host, common[i], common[j])) ++pairs;
    }
  }
  return pairs;
}

bool shares_noncollinear_pair(const IncidenceStructure& host, const Hyperplane& h1,
                              const Hyperplane& h2, const Hyperplane& h3) {
  return shared_noncollinear_pairs(host, h1, h2, h3) > 0;
}

DerivedGeometry build_derived(const CatalogEntry& host) {
  return build_derived(enumerate_hyperplanes(host.structure));
}

DerivedGeometry build_derived(const HyperplaneFamily& family) {
  if (family.size() != kDesarguesHyperplaneCount) {
    throw ConstructionError("expected " + std::to_string(kDesarguesHyperplaneCount) +
                            " hyperplanes in the host, found " + std::to_string(family.size()));
  }
  const int n = family.size();
  DerivedGeometry d;
  d.family = family;
  std::vector<Line> lines;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        const Hyperplane& ha = family.at(a);
        const Hyperplane& hb = family.at(b);
        const Hyperplane& hc = family.at(c);
        if (!xor_closed(ha, hb, hc)) continue;
        d.scan.xor_closed.push_back({a, b, c});
        const int pairs = shared_noncollinear_pairs(family.host, ha, hb, hc);
        if (pairs == 0) {
          d.scan.rejected.push_back({a, b, c});
          continue;
        }
        if (pairs == 1) ++d.scan.exactly_one_pair;
        d.scan.accepted.push_back({a, b, c});
        lines.push_back({a, b, c});
      }
    }
  }
  d.structure = IncidenceStructure("derived(" + family.host.name() + ")", n, std::move(lines));
  d.correspondence.resize(n);
  for (int i = 0; i < n; ++i) d.correspondence[i] = family.at(i).id;
  return d;
}

std::optional<IsomorphismWitness> check_witness(const DerivedGeometry& d,
                                                const CatalogEntry& reference,
                                                std::span<const int> point_map) {
  auto lines = induced_line_map(d.structure, reference.structure, point_map);
  if (!lines) return std::nullopt;
  if (!verify_flag_bijection(d.structure, reference.structure, point_map, *lines)) {
    return std::nullopt;
  }
  return IsomorphismWitness{Permutation(point_map.begin(), point_map.end()), *lines};
}

IsomorphismWitness certify_isomorphism(const DerivedGeometry& d, const CatalogEntry& reference) {
  auto map = find_isomorphism(d.structure, reference.structure);
  if (!map) {
    throw CertificationError("no isomorphism between " + d.structure.name() + " and " +
                             reference.structure.name());
  }
  auto witness = check_witness(d, reference, *map);
  if (!witness) throw CertificationError("isomorphism failed flag re-verification");
  return *witness;
}

bool is_derived_ovoid(const DerivedGeometry& d, const PointSet& points) {
  const IncidenceStructure& s = d.structure;
  if (points.universe() != s.num_points()) return false;
  const auto members = points.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (collinear(s, members[i], members[j])) return false;
    }
  }
  for (std::uint64_t line : s.line_masks()) {
    if (std::popcount(line & points.bits()) != 1) return false;
  }
  return true;
}

PointSet hyperplanes_of_class(const DerivedGeometry& d, HyperplaneClass kind) {
  PointSet out(d.structure.num_points());
  for (int p = 0; p < d.structure.num_points(); ++p) {
    if (d.family.at(d.correspondence[p]).kind == kind) out = out.with(p);
  }
  return out;
}

bool ovoid_image_check(const DerivedGeometry& d) {
  return is_derived_ovoid(d, hyperplanes_of_class(d, HyperplaneClass::kTriangle));
}

nlohmann::json derived_to_json(const DerivedGeometry& d) {
  nlohmann::json j = structure_to_json(d.structure);
  j["correspondence"] = d.correspondence;
  return j;
}

nlohmann::json witness_to_json(const IsomorphismWitness& w) {
  return {{"point_map", w.point_map}, {"line_map", w.line_map}};
}

}  // namespace doily
