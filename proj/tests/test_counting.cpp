#include <gtest/gtest.h>

#include "pslgcount/constructions.hpp"
#include "pslgcount/counting.hpp"
#include "pslgcount/oracle.hpp"
#include "pslgcount/random_instances.hpp"

using namespace pslgcount;

namespace {

Pslg triangle() { return {{{0, 0}, {2, 1}, {1, 3}}, {{0, 1}, {1, 2}, {0, 2}}, false}; }

}  // namespace

TEST(Counting, TriangleMonotone) {
  auto g = triangle();
  EXPECT_EQ(count_monotone_paths_in_direction(g, {1, 0}), 4);
  EXPECT_EQ(count_maximal_monotone_in_direction(g, {1, 0}), 2);
  EXPECT_EQ(count_monotone_paths_all_directions(g), 6);
}

TEST(Counting, PerpendicularEdgesExcluded) {
  Pslg vertical{{{0, 0}, {0, 1}}, {{0, 1}}, false};
  EXPECT_EQ(count_monotone_paths_in_direction(vertical, {1, 0}), 0);
  Pslg horizontal{{{0, 0}, {1, 0}}, {{0, 1}}, false};
  EXPECT_EQ(count_maximal_monotone_in_direction(horizontal, {1, 0}), 1);
}

TEST(Counting, StPaths) {
  Pslg chain{{{0, 0}, {1, 0}, {2, 1}}, {{0, 1}, {1, 2}}, true};
  EXPECT_EQ(count_directed_st_paths(chain, {0}, {2}), 1);
  EXPECT_EQ(count_directed_paths_total(chain), 3);
  EXPECT_EQ(count_directed_st_paths(gen_directed_lb(6), {0}, {5}), 13);
}

TEST(Counting, DirectedFan) {
  for (int n = 4; n <= 30; ++n) EXPECT_EQ(count_directed_paths_total(gen_directed_fan(n)), 3 * n - 5) << n;
}

TEST(Counting, CyclicDirectedGraphs) {
  Pslg cyc{{{0, 0}, {2, 0}, {1, 2}}, {{0, 1}, {1, 2}, {2, 0}}, true};
  EXPECT_EQ(count_directed_paths_total(cyc), oracle::count_directed_paths(cyc));
  EXPECT_THROW(count_directed_st_paths(cyc, {0}, {2}), CycleError);

  Pslg ring{{}, {}, true};
  for (int i = 0; i < 14; ++i) ring.points.push_back({i, BigInt(i) * i});
  for (int i = 0; i + 1 < 14; ++i) ring.edges.push_back({i, i + 1});
  ring.edges.push_back({13, 0});
  EXPECT_THROW(count_directed_paths_total(ring), PreconditionError);
  EXPECT_EQ(count_directed_paths_total(ring, 14), 14 * 13);
}

TEST(Counting, StarAtFanApexCorner) {
  auto g = gen_fan(5);
  Point o{Rational(1, 5), Rational(1, 2)};
  EXPECT_EQ(count_star_at_center(g, o), oracle::count_star_at_center(g, o));
}

TEST(Counting, StarCenterRejectsDegenerate) {
  auto g = triangle();
  EXPECT_THROW(count_star_at_center(g, g.points[0]), PreconditionError);
  EXPECT_THROW(count_star_at_center(g, Point{1, Rational(1, 2)}), PreconditionError);
}

TEST(Counting, StarIndependentOfCuttingRay) {
  auto g = gen_fan(7);
  Point o{Rational(1, 3), Rational(3, 2)};
  Count c = count_star_at_center(g, o, 0);
  for (std::size_t gap = 1; gap < 5; ++gap) EXPECT_EQ(count_star_at_center(g, o, gap), c);
}

TEST(Counting, ConvexAndPairs) {
  auto g = triangle();
  EXPECT_EQ(count_convex_polygons(g), 1);
  Pslg sq{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}, false};
  EXPECT_EQ(count_convex_polygons(sq), 3);
  EXPECT_EQ(count_convex_pairs(sq), oracle::count_convex_pairs(sq));
}

TEST(Counting, PropertyMatchesOracle) {
  Rng rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 3 + trial % 7;
    Pslg g = random_edge_maximal(n, rng);
    for (int d = 0; d < 3; ++d) {
      Vec2 u = random_direction(rng);
      EXPECT_EQ(count_monotone_paths_in_direction(g, u), oracle::count_monotone_in_direction(g, u));
      EXPECT_EQ(count_maximal_monotone_in_direction(g, u), oracle::count_maximal_monotone_in_direction(g, u));
    }
    EXPECT_EQ(count_monotone_paths_all_directions(g), oracle::count_monotone_all_directions(g));
    EXPECT_EQ(count_convex_polygons(g), oracle::count_convex_polygons(g));
    EXPECT_EQ(count_convex_pairs(g), oracle::count_convex_pairs(g));
    Point o = random_center(g, rng);
    EXPECT_EQ(count_star_at_center(g, o), oracle::count_star_at_center(g, o));
    Pslg d = random_acyclic_orientation(g, rng);
    EXPECT_EQ(count_directed_paths_total(d), oracle::count_directed_paths(d));
  }
}

TEST(Counting, DirectionClassesCoverCircle) {
  auto g = triangle();
  auto classes = critical_direction_classes(g);
  EXPECT_FALSE(classes.empty());
  EXPECT_EQ(critical_directions(g).size() % 2, 0u);
}
