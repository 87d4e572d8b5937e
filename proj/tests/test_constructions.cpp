#include <gtest/gtest.h>

#include "pslgcount/constructions.hpp"
#include "pslgcount/oracle.hpp"

using namespace pslgcount;

TEST(Constructions, MonotoneLbSizes) {
  auto g1 = gen_monotone_lb(1);
  EXPECT_EQ(g1.n(), 4u);
  EXPECT_EQ(g1.m(), 5u);
  EXPECT_EQ(gen_monotone_lb(3).n(), 10u);
  EXPECT_EQ(monotone_lb_size(10), 1026);
  EXPECT_FALSE(validate(gen_monotone_lb(8)));
}

TEST(Constructions, GkLevels) {
  auto g0 = gen_Gk(4, 0);
  EXPECT_EQ(g0.m(), g0.n() - 1);
  EXPECT_EQ(count_maximal_monotone_in_direction(g0, {1, 0}), 1);
  EXPECT_THROW(gen_Gk(3, 9), PreconditionError);
  EXPECT_THROW(gen_Gk(0, 0), PreconditionError);
}

TEST(Constructions, G1Fibonacci) {
  auto g = gen_Gk(5, 1);
  auto p = directed_paths_from(directed_by(g, {1, 0}), {0});
  for (std::size_t i = 1; i < p.size(); ++i) EXPECT_EQ(p[i], fibonacci(static_cast<long>(i) + 1)) << i;
}

TEST(Constructions, GroupMatricesMatchTransfer) {
  auto g = gen_Gk(5, 1);
  EXPECT_EQ(measure_group_matrix(g, 2, 0), transfer_matrix(2).entries);
  auto [x, y] = measure_boundary_counts(g);
  long q = (static_cast<long>(g.n()) - 2) / 2;
  EXPECT_EQ(power(transfer_matrix(2).entries, q).apply(1, 1), (std::pair<BigInt, BigInt>{x, y}));

  auto g3 = gen_Gk(6, 2);
  for (long i = 0; i < (static_cast<long>(g3.n()) - 2) / 4; ++i) EXPECT_EQ(measure_group_matrix(g3, 3, i), transfer_matrix(3).entries);
}

TEST(Constructions, StarLb) {
  auto g = gen_star_lb(1);
  EXPECT_EQ(g.n(), 12u);
  EXPECT_FALSE(validate(g));
  EXPECT_NO_THROW(require_valid_center(g, star_lb_center()));
}

TEST(Constructions, DirectedLbTribonacci) {
  auto g = gen_directed_lb(12);
  EXPECT_TRUE(g.directed);
  auto t = directed_paths_from(g, {0});
  t[0] = 1;
  for (int i = 3; i < 12; ++i) EXPECT_EQ(t[i], t[i - 1] + t[i - 2] + t[i - 3]);
  EXPECT_EQ(t[5], 13);
}

TEST(Constructions, ZigzagIsEdgeMaximal) {
  for (int n = 5; n <= 11; ++n) {
    auto g = gen_min_convex_zigzag(n);
    EXPECT_TRUE(analyze_triangulation(g).is_edge_maximal);
    EXPECT_TRUE(oracle::is_edge_maximal_bruteforce(g));
  }
}

TEST(Constructions, FanStarCounts) {
  EXPECT_EQ(oracle::count_star_total(gen_fan(4)), 3);
  for (int n = 3; n <= 9; ++n) EXPECT_EQ(oracle::count_star_total(gen_fan(n)), binomial(n - 1, 2)) << n;
}

TEST(Constructions, DirectedFan) {
  EXPECT_EQ(count_directed_paths_total(gen_directed_fan(4)), 7);
  EXPECT_EQ(count_directed_paths_total(gen_directed_fan(10)), 25);
}

TEST(Constructions, MinMonpathSmall) {
  auto t = gen_min_monpath_detailed(1);
  EXPECT_EQ(t.graph.n(), 4u);
  EXPECT_EQ(t.graph.m(), 6u);
  EXPECT_EQ(analyze_triangulation(t.graph).bounded_faces.size(), 3u);
  EXPECT_EQ(gen_min_monpath(3).n(), 10u);
}

TEST(Constructions, MinMonpathTau) {
  for (int l = 1; l <= 5; ++l) {
    auto t = gen_min_monpath_detailed(l);
    auto tau = measure_tau(t);
    for (std::size_t i = 0; i < tau.size(); ++i) EXPECT_EQ(tau[i], 2 * pow_ui(3, i)) << l << " " << i;
    Pslg up = directed_by(t.graph, {0, 1});
    if (t.layers.size() > 1) {
      EXPECT_EQ(count_directed_st_paths(up, t.layers[1], {t.a, t.b}), 6);
    }
  }
}

TEST(Constructions, MaximalMonotoneMatchesOracle) {
  auto g = gen_min_monpath(2);
  EXPECT_EQ(count_maximal_monotone_in_direction(g, {0, 1}), oracle::count_maximal_monotone_in_direction(g, {0, 1}));
}

TEST(Constructions, NamedDispatch) {
  EXPECT_EQ(construction_names().size(), 8u);
  EXPECT_EQ(generate({ConstructionName::FAN, {{"n", 6}}}), gen_fan(6));
  EXPECT_EQ(generate({parse_construction_name("min-monpath"), {{"l", 3}}}).n(), 10u);
  EXPECT_THROW(parse_construction_name("nope"), PreconditionError);
  EXPECT_THROW(generate({ConstructionName::GK, {{"l", 3}}}), PreconditionError);
}

TEST(Constructions, Deterministic) {
  for (const auto& [name, id] : construction_names()) {
    ConstructionSpec spec{id, {{"l", 2}, {"k", 1}, {"n", 6}}};
    EXPECT_EQ(generate(spec), generate(spec)) << name;
  }
}
