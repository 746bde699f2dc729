#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "doily/incidence.hpp"
#include "doily/symmetry.hpp"

namespace doily {

struct CensusOptions {
  // Lifts the default budget of 7 <= v <= 11 to v <= kSymmetryPointLimit.
  bool long_run = false;
};

struct CensusMember {
  IncidenceStructure structure;  // colex-minimal representative
  CanonicalForm form;
};

struct CensusResult {
  int v = 0;
  int total = 0;
  std::vector<CensusMember> members;  // generation order
};

inline constexpr int kCensusMinPoints = 7;
inline constexpr int kCensusDefaultMaxPoints = 11;

// All v_3 configurations up to isomorphism, one colex-minimal representative
// per class. Lines are added in increasing colex order and a partial
// structure is kept only if it is colex-minimal itself; minimality is
// inherited by prefixes, so every class is produced exactly once.
CensusResult enumerate_v3(int v, CensusOptions options = {});

struct MemberProperties {
  bool flag_transitive = false;
  // For every point, the points not collinear with it are exactly a line.
  bool noncollinear_triples_are_lines = false;
  bool connected = false;
};

struct CensusSummary {
  std::vector<MemberProperties> per_member;
  std::vector<int> flag_transitive;  // member indices
  std::vector<int> noncollinear_line;
  int connected = 0;
};

MemberProperties member_properties(const IncidenceStructure& s);
CensusSummary census_properties(const CensusResult& census);

bool noncollinear_sets_are_lines(const IncidenceStructure& s);
bool is_connected(const IncidenceStructure& s);

nlohmann::json census_to_json(const CensusResult& census, const CensusSummary& summary);

}  // namespace doily
