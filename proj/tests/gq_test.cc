#include <gtest/gtest.h>

#include <random>
#include <set>

#include "doily/catalog.hpp"
#include "doily/gq.hpp"
#include "oracle.hpp"

namespace doily {
namespace {

IncidenceStructure grid3() {
  return IncidenceStructure("grid", 9,
                            {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6}, {1, 4, 7}, {2, 5, 8}});
}

TEST(TriangleTest, Counts) {
  EXPECT_EQ(count_triangles(doily().structure), 0);
  EXPECT_EQ(count_triangles(desargues().structure), 20);
  EXPECT_EQ(oracle::triangles(desargues().structure.lines(), 10), 20);
  EXPECT_EQ(count_triangles(IncidenceStructure("line", 3, {{0, 1, 2}})), 0);
  EXPECT_EQ(count_triangles(fano().structure), oracle::triangles(fano().structure.lines(), 7));
  EXPECT_EQ(count_triangles(fano().structure), 28);
}

TEST(TriangleTest, NonLinearRejected) {
  const IncidenceStructure s("nonlinear", 4, {{0, 1, 2}, {0, 1, 3}});
  EXPECT_THROW(count_triangles(s), DomainError);
}

TEST(GQAxiomTest, DoilyAndDesargues) {
  const auto r = gq_axiom_holds(doily().structure);
  EXPECT_TRUE(r.axiom_holds);
  EXPECT_TRUE(r.triangle_free);
  EXPECT_EQ(r.s_param, 2);
  EXPECT_EQ(r.t_param, 2);
  EXPECT_EQ(r.ovoids.size(), 6u);
  const auto d = gq_axiom_holds(desargues().structure);
  EXPECT_FALSE(d.axiom_holds);
  EXPECT_EQ(d.triangle_count, 20);
  EXPECT_FALSE(oracle::gq_axiom(desargues().structure.lines(), 10));
  EXPECT_TRUE(oracle::gq_axiom(doily().structure.lines(), 15));
}

TEST(GQAxiomTest, GridIsAQuadrangleWithTEqualsOne) {
  // The 3x3 grid meets the point-line axiom; it is the thin quadrangle of
  // order (2,1).
  const auto g = grid3();
  ASSERT_TRUE(oracle::gq_axiom(g.lines(), 9));
  const auto r = gq_axiom_holds(g);
  EXPECT_TRUE(r.axiom_holds);
  EXPECT_EQ(r.s_param, 2);
  EXPECT_EQ(r.t_param, 1);
  EXPECT_EQ(r.triangle_count, 0);
  // Ovoids of the grid are the 6 permutation matrices.
  EXPECT_EQ(r.ovoids.size(), 6u);
}

TEST(GQAxiomTest, FailsOnProjectivePlaneAndNonUniform) {
  EXPECT_FALSE(gq_axiom_holds(fano().structure).axiom_holds);
  EXPECT_FALSE(oracle::gq_axiom(fano().structure.lines(), 7));
  const IncidenceStructure mixed("mixed", 5, {{0, 1, 2}, {2, 3}, {3, 4, 0}});
  EXPECT_FALSE(gq_axiom_holds(mixed).axiom_holds);
}

TEST(GQAxiomTest, InvariantUnderRelabeling) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto perm = oracle::random_permutation(15, rng);
    const auto s = doily().structure.relabeled(perm);
    const auto r = gq_axiom_holds(s);
    EXPECT_TRUE(r.axiom_holds);
    EXPECT_EQ(r.ovoids.size(), 6u);
    const auto perm10 = oracle::random_permutation(10, rng);
    EXPECT_FALSE(gq_axiom_holds(desargues().structure.relabeled(perm10)).axiom_holds);
  }
}

TEST(OvoidTest, DoilyOvoidsAreStars) {
  std::set<std::uint64_t> stars;
  for (int x = 0; x < 6; ++x) {
    std::uint64_t m = 0;
    for (int y = 0; y < 6; ++y) {
      if (y != x) m |= std::uint64_t{1} << duad_index(x, y, 6);
    }
    stars.insert(m);
  }
  const auto s = doily().structure;
  std::set<std::uint64_t> found;
  for (const auto& o : find_ovoids(s)) {
    EXPECT_EQ(o.size(), 5);
    EXPECT_TRUE(is_ovoid(s, o));
    found.insert(o.bits());
  }
  EXPECT_EQ(found, stars);
}

TEST(OvoidTest, IsOvoidRejects) {
  const auto s = doily().structure;
  // A line's points are collinear.
  const Line& l = s.lines().front();
  EXPECT_FALSE(is_ovoid(s, PointSet(15, (1u << l[0]) | (1u << l[1]) | (1u << l[2]))));
  EXPECT_FALSE(is_ovoid(s, PointSet(15, 0)));
}

TEST(OvoidTest, RequiresQuadrangle) {
  EXPECT_THROW(find_ovoids(desargues().structure), DomainError);
}

TEST(GQJsonTest, Fields) {
  const auto j = gq_report_to_json(gq_axiom_holds(doily().structure));
  EXPECT_EQ(j["axiom_holds"], true);
  EXPECT_EQ(j["triangle_free"], true);
  EXPECT_EQ(j["s"], 2);
  EXPECT_EQ(j["t"], 2);
  EXPECT_EQ(j["ovoids"].size(), 6u);
}

}  // namespace
}  // namespace doily
