#include <gtest/gtest.h>

#include "pslgcount/constructions.hpp"
#include "pslgcount/oracle.hpp"

using namespace pslgcount;

namespace {

Pslg triangle() { return {{{0, 0}, {2, 1}, {1, 3}}, {{0, 1}, {1, 2}, {0, 2}}, false}; }

}  // namespace

TEST(Oracle, TrianglePathsAndCycles) {
  auto g = triangle();
  EXPECT_EQ(oracle::enumerate_simple_paths(g).size(), 6u);
  auto cycles = oracle::enumerate_simple_cycles(g);
  ASSERT_EQ(cycles.size(), 1u);
  EXPECT_TRUE(oracle::is_convex(cycles[0], g));
  EXPECT_TRUE(oracle::is_star_shaped(cycles[0], g));
}

TEST(Oracle, MonotoneInDirection) {
  auto g = triangle();
  EXPECT_EQ(oracle::count_monotone_in_direction(g, {1, 0}), 4);
  EXPECT_EQ(oracle::count_maximal_monotone_in_direction(g, {1, 0}), 2);
  Pslg vertical{{{0, 0}, {0, 1}}, {{0, 1}}, false};
  EXPECT_EQ(oracle::count_monotone_in_direction(vertical, {1, 0}), 0);
  Pslg horizontal{{{0, 0}, {1, 0}}, {{0, 1}}, false};
  EXPECT_EQ(oracle::count_maximal_monotone_in_direction(horizontal, {1, 0}), 1);
}

TEST(Oracle, MonotoneWitness) {
  Pslg g{{{0, 0}, {1, 0}, {1, 1}, {0, 2}}, {{0, 1}, {1, 2}, {2, 3}}, false};
  auto u = oracle::is_monotone(std::vector<VertexId>{0, 1, 2, 3}, g);
  ASSERT_TRUE(u);
  for (auto [a, b] : std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}) EXPECT_GT(dot_sign(g.points[b] - g.points[a], *u), 0);
  // Edges (1,0) and (-1,0) can never both be positive.
  Pslg back{{{0, 0}, {1, 0}, {0, 1}}, {{0, 1}, {1, 2}}, false};
  EXPECT_TRUE(oracle::is_monotone(std::vector<VertexId>{0, 1, 2}, back));
  Pslg rev{{{0, 0}, {2, 0}, {1, 0}}, {}, false};
  EXPECT_FALSE(oracle::is_monotone(std::vector<VertexId>{0, 1, 2}, rev));
}

TEST(Oracle, StarShapedKernel) {
  // Nonconvex arrow: kernel is nonempty.
  Pslg g{{{0, 0}, {4, 0}, {4, 4}, {2, 1}, {0, 4}}, {}, false};
  std::vector<VertexId> c{0, 1, 2, 3, 4};
  EXPECT_FALSE(oracle::is_convex(c, g));
  auto k = oracle::is_star_shaped(c, g);
  ASSERT_TRUE(k);
  EXPECT_TRUE(oracle::kernel_contains(c, g, *k));
  EXPECT_FALSE(oracle::kernel_contains(c, g, Point{2, 3}));
}

TEST(Oracle, DirectedCounts) {
  Pslg chain{{{0, 0}, {1, 0}, {2, 1}}, {{0, 1}, {1, 2}}, true};
  EXPECT_EQ(oracle::count_directed_paths(chain), 3);
  EXPECT_EQ(oracle::count_directed_paths(gen_directed_fan(4)), 7);
  EXPECT_EQ(oracle::count_directed_paths(gen_directed_fan(10)), 25);
}

TEST(Oracle, FanStarTotal) {
  EXPECT_EQ(oracle::count_star_total(gen_fan(4)), 3);
  EXPECT_GE(oracle::count_star_total(gen_fan(6)), 10);
}

TEST(Oracle, LimitEnforced) {
  auto g = gen_fan(13);
  EXPECT_THROW(oracle::enumerate_simple_paths(g), oracle::LimitError);
  EXPECT_NO_THROW(oracle::count_convex_polygons(g, 13));
}

TEST(Oracle, EdgeMaximalBruteforce) {
  EXPECT_TRUE(oracle::is_edge_maximal_bruteforce(triangle()));
  EXPECT_TRUE(oracle::is_edge_maximal_bruteforce(gen_fan(7)));
  Pslg square{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, false};
  EXPECT_FALSE(oracle::is_edge_maximal_bruteforce(square));
}

TEST(Oracle, MaximalEndpointsOnHull) {
  EXPECT_FALSE(oracle::check_maximal_endpoints_on_hull(gen_fan(6)));
  EXPECT_FALSE(oracle::check_maximal_endpoints_on_hull(gen_min_convex_zigzag(7)));
}
