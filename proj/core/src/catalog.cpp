#include "doily/catalog.hpp"

#include <utility>

namespace doily {

namespace {

std::vector<std::pair<int, int>> duads(int n) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) out.emplace_back(a, b);
  }
  return out;
}

std::vector<std::string> duad_labels(int n) {
  std::vector<std::string> labels;
  for (auto [a, b] : duads(n)) {
    labels.push_back("{" + std::to_string(a) + "," + std::to_string(b) + "}");
  }
  return labels;
}

}  // namespace

int duad_index(int a, int b, int n) {
  if (a == b || a < 0 || b < 0 || a >= n || b >= n) {
    throw DomainError("duad_index: need two distinct symbols in [0, n)");
  }
  if (a > b) std::swap(a, b);
  // Duads {x, y} with x < a come first: sum over x of (n - 1 - x).
  return a * (2 * n - a - 1) / 2 + (b - a - 1);
}

CatalogEntry desargues() {
  constexpr int n = 5;
  std::vector<Line> lines;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        lines.push_back({duad_index(a, b, n), duad_index(a, c, n), duad_index(b, c, n)});
      }
    }
  }
  return {CatalogId::kDesargues, IncidenceStructure("desargues", 10, std::move(lines)),
          duad_labels(n)};
}

CatalogEntry doily() {
  constexpr int n = 6;
  std::vector<Line> lines;
  // A syntheme is fixed by the partner of 0 and then the partner of the
  // smallest remaining symbol.
  for (int x = 1; x < n; ++x) {
    std::vector<int> rest;
    for (int s = 1; s < n; ++s) {
      if (s != x) rest.push_back(s);
    }
    const int first = rest[0];
    for (std::size_t i = 1; i < rest.size(); ++i) {
      std::vector<int> last;
      for (std::size_t k = 1; k < rest.size(); ++k) {
        if (k != i) last.push_back(rest[k]);
      }
      lines.push_back({duad_index(0, x, n), duad_index(first, rest[i], n),
                       duad_index(last[0], last[1], n)});
    }
  }
  return {CatalogId::kDoily, IncidenceStructure("doily", 15, std::move(lines)), duad_labels(n)};
}

CatalogEntry fano() {
  std::vector<Line> lines;
  std::vector<std::string> labels;
  for (int i = 0; i < 7; ++i) {
    lines.push_back({i, (i + 1) % 7, (i + 3) % 7});
    labels.push_back(std::to_string(i));
  }
  return {CatalogId::kFano, IncidenceStructure("fano", 7, std::move(lines)), std::move(labels)};
}

std::string_view catalog_name(CatalogId id) {
  switch (id) {
    case CatalogId::kDesargues:
      return "desargues";
    case CatalogId::kDoily:
      return "doily";
    case CatalogId::kFano:
      return "fano";
  }
  return "unknown";
}

std::optional<CatalogId> parse_catalog_name(std::string_view name) {
  for (CatalogId id : {CatalogId::kDesargues, CatalogId::kDoily, CatalogId::kFano}) {
    if (catalog_name(id) == name) return id;
  }
  return std::nullopt;
}

CatalogEntry catalog_entry(CatalogId id) {
  switch (id) {
    case CatalogId::kDesargues:
      return desargues();
    case CatalogId::kDoily:
      return doily();
    case CatalogId::kFano:
      return fano();
  }
  throw DomainError("unknown catalog id");
}

}  // namespace doily
