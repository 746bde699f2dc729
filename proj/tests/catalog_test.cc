#include <gtest/gtest.h>

#include <set>

#include "doily/catalog.hpp"
#include "doily/symmetry.hpp"
#include "oracle.hpp"

namespace doily {
namespace {

TEST(CatalogTest, DuadIndex) {
  EXPECT_EQ(duad_index(0, 1, 5), 0);
  EXPECT_EQ(duad_index(1, 2, 5), 4);
  EXPECT_EQ(duad_index(4, 3, 5), 9);
  EXPECT_EQ(duad_index(4, 5, 6), 14);
  EXPECT_THROW(duad_index(2, 2, 5), DomainError);
}

TEST(CatalogTest, DesarguesModel) {
  const auto entry = desargues();
  EXPECT_EQ(entry.id, CatalogId::kDesargues);
  EXPECT_EQ(entry.structure.num_points(), 10);
  EXPECT_EQ(entry.labels.front(), "{0,1}");
  EXPECT_EQ(entry.labels.back(), "{3,4}");
  // Frozen from the duad containment construction.
  EXPECT_EQ(entry.structure.lines(),
            (std::vector<Line>{{0, 1, 4}, {0, 2, 5}, {0, 3, 6}, {1, 2, 7}, {1, 3, 8},
                               {2, 3, 9}, {4, 5, 7}, {4, 6, 8}, {5, 6, 9}, {7, 8, 9}}));
  EXPECT_TRUE(validate_configuration(entry.structure).is_configuration(3));
  EXPECT_EQ(entry.structure.flag_count(), 30);
}

TEST(CatalogTest, DoilyModelIsDuadSyntheme) {
  const auto entry = doily();
  const auto& s = entry.structure;
  EXPECT_EQ(s.num_points(), 15);
  EXPECT_EQ(s.num_lines(), 15);
  EXPECT_EQ(s.flag_count(), 45);
  EXPECT_TRUE(validate_configuration(s).is_configuration(3));

  // Oracle: all perfect matchings of {0..5}.
  std::set<std::vector<int>> matchings;
  for (int a = 0; a < 15; ++a) {
    for (int b = 0; b < 15; ++b) {
      for (int c = 0; c < 15; ++c) {
        std::set<std::string> labels{entry.labels[a], entry.labels[b], entry.labels[c]};
        if (labels.size() != 3) continue;
        std::set<char> symbols;
        for (const auto& l : labels) {
          symbols.insert(l[1]);
          symbols.insert(l[3]);
        }
        if (symbols.size() == 6) {
          std::vector<int> t{a, b, c};
          std::sort(t.begin(), t.end());
          matchings.insert(t);
        }
      }
    }
  }
  EXPECT_EQ(matchings.size(), 15u);
  EXPECT_EQ(oracle::normalized(s.lines()), matchings);

  const std::vector<int> syn{duad_index(0, 1, 6), duad_index(2, 3, 6), duad_index(4, 5, 6)};
  EXPECT_TRUE(find_line(s, PointSet(15, syn)).has_value());
}

TEST(CatalogTest, DoilyCollinearIffDisjoint) {
  const auto entry = doily();
  std::vector<std::pair<int, int>> duads;
  for (int a = 0; a < 6; ++a) {
    for (int b = a + 1; b < 6; ++b) duads.emplace_back(a, b);
  }
  for (int p = 0; p < 15; ++p) {
    for (int q = 0; q < 15; ++q) {
      if (p == q) continue;
      const auto [a, b] = duads[p];
      const auto [c, d] = duads[q];
      const bool disjoint = a != c && a != d && b != c && b != d;
      EXPECT_EQ(collinear(entry.structure, p, q), disjoint);
    }
  }
}

TEST(CatalogTest, FanoIsAProjectivePlane) {
  const auto s = fano().structure;
  EXPECT_EQ(s.num_lines(), 7);
  EXPECT_EQ(s.flag_count(), 21);
  EXPECT_TRUE(validate_configuration(s).is_configuration(3));
  for (int p = 0; p < 7; ++p) {
    for (int q = p + 1; q < 7; ++q) {
      int common = 0;
      for (const auto& l : s.lines()) common += oracle::on_line(l, p) && oracle::on_line(l, q);
      EXPECT_EQ(common, 1);
    }
  }
}

TEST(CatalogTest, DeterministicAndSelfDual) {
  for (CatalogId id : {CatalogId::kDesargues, CatalogId::kDoily, CatalogId::kFano}) {
    const auto a = catalog_entry(id);
    const auto b = catalog_entry(id);
    EXPECT_EQ(a.structure, b.structure);
    EXPECT_EQ(a.labels, b.labels);
    EXPECT_EQ(static_cast<int>(a.labels.size()), a.structure.num_points());
    EXPECT_EQ(canonical_form(a.structure), canonical_form(dual(a.structure)));
    EXPECT_EQ(parse_catalog_name(catalog_name(id)), id);
  }
  EXPECT_FALSE(parse_catalog_name("pappus").has_value());
}

}  // namespace
}  // namespace doily
