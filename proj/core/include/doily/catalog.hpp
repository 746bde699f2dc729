#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "doily/incidence.hpp"

namespace doily {

enum class CatalogId { kDesargues, kDoily, kFano };

struct CatalogEntry {
  CatalogId id;
  IncidenceStructure structure;
  std::vector<std::string> labels;  // one per point
};

// Points are the duads of {0..4} in lexicographic order; each 3-subset of
// {0..4} gives the line of the three duads it contains.
CatalogEntry desargues();

// Duad-syntheme model of GQ(2,2): points are the duads of {0..5}, lines the
// 15 partitions of {0..5} into three duads.
CatalogEntry doily();

// Lines {i, i+1, i+3} mod 7.
CatalogEntry fano();

std::string_view catalog_name(CatalogId id);
std::optional<CatalogId> parse_catalog_name(std::string_view name);
CatalogEntry catalog_entry(CatalogId id);

// Index of the duad {a, b} (a != b) among the lexicographically ordered
// duads of {0..n-1}.
int duad_index(int a, int b, int n);

}  // namespace doily
