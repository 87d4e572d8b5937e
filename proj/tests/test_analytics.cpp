#include <gtest/gtest.h>

#include "pslgcount/analytics.hpp"

using namespace pslgcount;

TEST(Analytics, TransferMatrices) {
  EXPECT_EQ(transfer_matrix(2).entries, (Matrix2{2, 1, 1, 1}));
  EXPECT_EQ(transfer_matrix(3).entries, (Matrix2{6, 3, 4, 3}));
  EXPECT_EQ(transfer_matrix(5).entries.trace(), 4885);
  EXPECT_THROW(transfer_matrix(1), std::invalid_argument);
}

TEST(Analytics, MatrixPower) {
  Matrix2 m{1, 1, 1, 0};
  auto p = power(m, 50);
  EXPECT_EQ(p.b, BigInt("12586269025"));
  EXPECT_EQ(power(m, 0), Matrix2::identity());
  EXPECT_EQ(m.apply(3, 2), (std::pair<BigInt, BigInt>{5, 3}));
}

TEST(Analytics, DominantEigenvalue) {
  auto l5 = dominant_eigenvalue(transfer_matrix(5));
  EXPECT_EQ(l5.to_string(), "4885 9 294153 2");
  EXPECT_TRUE(l5.fully_reduced);
  auto id = dominant_eigenvalue(Matrix2::identity());
  EXPECT_EQ(id.to_string(), "1 0 0 1");
  EXPECT_EQ(dominant_eigenvalue(transfer_matrix(2)).to_string(), "3 1 5 2");
}

TEST(Analytics, SurdCanonicalForm) {
  EXPECT_EQ(make_surd(2, 2, 8, 4).to_string(), "1 2 2 2");
  EXPECT_EQ(make_surd(1, 1, 9, -2).to_string(), "-2 0 0 1");
  EXPECT_THROW(make_surd(1, 1, 2, 0), std::invalid_argument);
  EXPECT_THROW(make_surd(1, 1, -2, 1), std::invalid_argument);
}

TEST(Analytics, GrowthRateTable) {
  const char* expected[] = {"1.61803", "1.69605", "1.70034", "1.70037", "1.70037"};
  for (int k = 2; k <= 6; ++k) {
    auto r = growth_rate(k, 64);
    EXPECT_TRUE(r.width_below_pow2(64));
    EXPECT_EQ(r.truncated(5), expected[k - 2]) << k;
  }
  EXPECT_NEAR(growth_rate(2, 64).approx(), (1 + std::sqrt(5.0)) / 2, 1e-15);
  EXPECT_LT(std::abs(growth_rate(6, 80).approx() - growth_rate(5, 80).approx()), 1e-8);
}

TEST(Analytics, GrowthRateHighPrecision) {
  auto r = growth_rate(4, 300);
  EXPECT_TRUE(r.width_below_pow2(300));
  auto d = r.rounded(60);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->substr(0, 20), "1.700340161297188120");
}

TEST(Analytics, TribonacciRoot) {
  auto [lo, hi] = tribonacci_root(64);
  EXPECT_LT(lo, hi);
  EXPECT_LT(hi - lo, Rational(1, BigInt(1) << 64));
  EXPECT_LT(sgn(tribonacci_residual(lo)), 0);
  EXPECT_GT(sgn(tribonacci_residual(hi)), 0);
  EXPECT_NEAR(lo.get_d(), 1.839286755214161, 1e-14);
}

TEST(Analytics, Sequences) {
  EXPECT_EQ(fibonacci(1), 1);
  EXPECT_EQ(fibonacci(2), 1);
  EXPECT_EQ(fibonacci(10), 55);
  auto b = tribonacci_sequence(7);
  std::vector<Count> want{1, 1, 2, 4, 7, 13, 24};
  EXPECT_EQ(b, want);
  EXPECT_EQ(tribonacci_bound_sum(7), 52);
  auto ratio = tribonacci_bound(201).get_d() / tribonacci_bound(200).get_d();
  EXPECT_NEAR(ratio, 1.8392867552141612, 1e-12);
}

TEST(Analytics, Bounds) {
  EXPECT_EQ(star_lb_bound(10, 0), Rational(89, 5));
  EXPECT_EQ(star_lb_bound(3, 0), Rational(1));
  EXPECT_THROW(star_lb_bound(5, 3), std::invalid_argument);
  EXPECT_EQ(directed_path_bound(4, 2).product_bound, 36);
  EXPECT_EQ(directed_path_bound(7, 7).product_bound, pow_ui(3, 7));
  EXPECT_EQ(directed_path_bound(4, 2).global_cap, 16 * 81);
  EXPECT_THROW(directed_path_bound(4, 5), std::invalid_argument);
}

TEST(Analytics, EstimateGrowth) {
  std::vector<long> n;
  std::vector<Count> pow2, flat;
  for (long i = 5; i <= 40; ++i) {
    n.push_back(i);
    pow2.push_back(pow_ui(2, i));
    flat.push_back(17);
  }
  EXPECT_NEAR(estimate_growth(n, pow2), 2.0, 1e-9);
  EXPECT_NEAR(estimate_growth(n, flat), 1.0, 1e-12);
  EXPECT_THROW(estimate_growth({1, 2}, {1, 2}), std::invalid_argument);
}
