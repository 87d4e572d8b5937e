#include <gtest/gtest.h>

#include "pslgcount/constructions.hpp"
#include "pslgcount/random_instances.hpp"
#include "pslgcount/transform.hpp"

using namespace pslgcount;

namespace {

OrderedMultigraph multigraph(int n, std::initializer_list<std::pair<int, int>> es) {
  OrderedMultigraph g{n, {}};
  for (auto [i, j] : es) g.add(i, j);
  return g;
}

MonotoneTriangulation quad() {
  MonotoneTriangulation t;
  t.n = 4;
  t.edges = {{1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}};
  t.faces = {{1, 2, 4}, {1, 3, 4}};
  return t;
}

}  // namespace

TEST(Transform, MultigraphCount) {
  EXPECT_EQ(count_xmonotone_multigraph(multigraph(4, {{1, 2}, {2, 3}, {3, 4}})), 6);
  auto g = multigraph(3, {{1, 2}, {2, 3}});
  g.add(1, 3, 2);
  EXPECT_EQ(count_xmonotone_multigraph(g), 5);
  EXPECT_THROW(g.add(3, 1), TransformError);
}

TEST(Transform, Shift) {
  auto g = multigraph(4, {{1, 2}, {1, 4}, {2, 3}, {3, 4}});
  auto s = shift(g, 1, 2, 4);
  EXPECT_EQ(s, multigraph(4, {{1, 2}, {2, 3}, {3, 4}, {2, 4}}));
  EXPECT_GE(count_xmonotone_multigraph(s), count_xmonotone_multigraph(g));
  try {
    shift(g, 2, 1, 4);
    FAIL();
  } catch (const TransformError& e) {
    EXPECT_EQ(e.code(), TransformErrorCode::BAD_INDICES);
  }
  try {
    shift(g, 1, 3, 4);
    FAIL();
  } catch (const TransformError& e) {
    EXPECT_EQ(e.code(), TransformErrorCode::MISSING_EDGE);
  }
}

TEST(Transform, Flip) {
  auto t = quad();
  ASSERT_TRUE(flip_partner(t, 1, 4));
  EXPECT_EQ(*flip_partner(t, 1, 4), (std::pair<int, int>{2, 3}));
  EXPECT_FALSE(lemma2_predicate(t, 1, 4));
  auto f = flip(t, 1, 4);
  EXPECT_TRUE(f.edges.count({2, 3}));
  EXPECT_FALSE(f.edges.count({1, 4}));
  EXPECT_LT(f.total_length(), t.total_length());
  EXPECT_EQ(count_xmonotone_multigraph(t.multigraph()), 7);
  EXPECT_EQ(count_xmonotone_multigraph(f.multigraph()), 10);
  EXPECT_TRUE(lemma3_predicate(f));
  try {
    flip(f, 1, 2);
    FAIL();
  } catch (const TransformError& e) {
    EXPECT_EQ(e.code(), TransformErrorCode::NOT_FLIPPABLE);
  }
  EXPECT_THROW(lemma2_predicate(t, 1, 2), TransformError);
}

TEST(Transform, Invariants) {
  auto path = multigraph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
  EXPECT_TRUE(invariant_i1(path));
  EXPECT_TRUE(invariant_i2(path));
  auto dense = path;
  dense.add(1, 3, 3);
  EXPECT_FALSE(invariant_i2(dense));
  auto doubled = path;
  doubled.add(1, 2);
  EXPECT_FALSE(invariant_i1(doubled));
  EXPECT_TRUE(outgoing_distances_ok(multigraph(5, {{1, 2}, {1, 3}, {1, 4}})));
  EXPECT_FALSE(outgoing_distances_ok(multigraph(5, {{1, 2}, {1, 2}, {1, 4}})));
}

TEST(Transform, ReduceOutdegrees) {
  auto fan = to_monotone_triangulation(gen_fan(8)).multigraph();
  auto r = reduce_outdegrees(fan);
  EXPECT_LE(max_outdegree(r.graph), 3);
  EXPECT_TRUE(outgoing_distances_ok(r.graph));
  EXPECT_GE(count_xmonotone_multigraph(r.graph), count_xmonotone_multigraph(fan));
  EXPECT_EQ(r.log.size(), r.steps);
  for (const auto& line : r.log) EXPECT_EQ(line.rfind("SHIFT ", 0), 0u);
}

TEST(Transform, PipelineOnRandomInstances) {
  Rng rng(5);
  for (int trial = 0; trial < 8; ++trial) {
    Pslg g = random_edge_maximal(4 + trial, rng);
    auto r = run_pipeline(g);
    EXPECT_TRUE(r.flips_nondecreasing);
    EXPECT_TRUE(r.lemma2_holds);
    EXPECT_TRUE(r.lemma3_holds);
    EXPECT_LE(r.final_max_outdegree, 3);
    EXPECT_TRUE(r.final_distances_ok);
    EXPECT_LE(r.original_count, r.sheared_count);
    EXPECT_LE(r.sheared_count, r.normalized_count);
    EXPECT_LE(r.normalized_count, r.final_count);
    EXPECT_LE(r.final_count, r.tribonacci_paths);
    EXPECT_EQ(r.tribonacci_paths, monotone_total_bound(r.n));
  }
}

TEST(Transform, RequiresEdgeMaximal) {
  Pslg square{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, false};
  EXPECT_THROW(to_monotone_triangulation(square), PreconditionError);
}
