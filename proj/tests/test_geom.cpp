#include <gtest/gtest.h>

#include "pslgcount/geom.hpp"

using namespace pslgcount;

TEST(Geom, Orientation) {
  EXPECT_EQ(orient({0, 0}, {1, 0}, {0, 1}), Orientation::CCW);
  EXPECT_EQ(orient({0, 0}, {0, 1}, {1, 0}), Orientation::CW);
  EXPECT_EQ(orient({0, 0}, {1, 1}, {Rational(1, 3), Rational(1, 3)}), Orientation::COLLINEAR);
}

TEST(Geom, OrientationExactNearDegenerate) {
  BigInt big("1000000000000000000000");
  Point p{0, 0}, q{big, big + 1};
  Point r{2 * big, 2 * big + 2};
  EXPECT_EQ(orient(p, q, r), Orientation::COLLINEAR);
  r.y += Rational(1, big);
  EXPECT_EQ(orient(p, q, r), Orientation::CCW);
}

TEST(Geom, SegmentRelations) {
  auto rel = [](Point a, Point b, Point c, Point d) { return segment_relation({a, b}, {c, d}); };
  EXPECT_EQ(rel({0, 0}, {2, 2}, {0, 2}, {2, 0}), SegmentRelation::CROSSING);
  EXPECT_EQ(rel({0, 0}, {1, 0}, {1, 0}, {2, 1}), SegmentRelation::SHARED_ENDPOINT);
  EXPECT_EQ(rel({0, 0}, {2, 0}, {1, 0}, {1, 1}), SegmentRelation::TOUCHING);
  EXPECT_EQ(rel({0, 0}, {2, 0}, {1, 0}, {3, 0}), SegmentRelation::OVERLAPPING);
  EXPECT_EQ(rel({0, 0}, {1, 0}, {0, 1}, {1, 1}), SegmentRelation::DISJOINT);
  EXPECT_EQ(rel({0, 0}, {1, 0}, {2, 0}, {3, 0}), SegmentRelation::DISJOINT);
}

TEST(Geom, DyadicAngle) {
  EXPECT_TRUE(angle_less_than_dyadic({0, 0}, {1, 0}, {1, 1}, 1));
  EXPECT_EQ(compare_angle_dyadic({0, 0}, {1, 0}, {0, 1}, 1), AngleComparison::EQUAL);
  EXPECT_FALSE(angle_less_than_dyadic({0, 0}, {1, 0}, {0, 1}, 1));
  EXPECT_TRUE(angle_less_than_dyadic({0, 0}, {1, 0}, {1, Rational(1, 1000)}, 8));
  EXPECT_FALSE(angle_less_than_dyadic({0, 0}, {1, 0}, {1, Rational(1, 10)}, 8));
}

TEST(Geom, HalfPlaneFeasibility) {
  std::vector<HalfPlane> box{HalfPlane::left_of({0, 0}, {1, 0}), HalfPlane::left_of({1, 0}, {1, 1}),
                             HalfPlane::left_of({1, 1}, {0, 1}), HalfPlane::left_of({0, 1}, {0, 0})};
  auto w = halfplane_intersection_witness(box);
  ASSERT_TRUE(w);
  for (const auto& h : box) EXPECT_TRUE(h.contains(*w));

  // Two opposite open half-planes sharing a boundary line are disjoint.
  std::vector<HalfPlane> slab{HalfPlane::left_of({0, 0}, {1, 0}), HalfPlane::left_of({1, 0}, {0, 0})};
  EXPECT_FALSE(halfplane_intersection_witness(slab));
}

TEST(Geom, AngleOrderAroundCircle) {
  std::vector<Vec2> dirs{{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
  for (std::size_t i = 0; i + 1 < dirs.size(); ++i) {
    EXPECT_TRUE(angle_less(dirs[i], dirs[i + 1]));
    EXPECT_FALSE(angle_less(dirs[i + 1], dirs[i]));
  }
  EXPECT_TRUE(same_direction({2, 2}, {1, 1}));
  EXPECT_FALSE(same_direction({2, 2}, {-1, -1}));
}
